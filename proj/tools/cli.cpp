#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wbu3/verify.hpp"

namespace wbu3::cli {

namespace {

using nlohmann::json;

json basket_json(const Basket& basket) {
    json arr = json::array();
    for (const auto& e : basket.entries)
        arr.push_back({e.r, e.v});
    return arr;
}

std::string basket_text(const Basket& basket) {
    if (basket.empty())
        return "{}";
    std::string s = "{";
    for (std::size_t k = 0; k < basket.entries.size(); ++k) {
        if (k)
            s += ",";
        s += "(" + std::to_string(basket.entries[k].r) + "," +
             std::to_string(basket.entries[k].v) + ")";
    }
    return s + "}";
}

json monomial_json(const Monomial& m) { return json{m.s, m.t, m.u}; }

struct Invocation {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::ostringstream text;  // human-readable rendering
};

} // namespace

Basket parse_basket(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty() || s == "-")
        return Basket();
    std::vector<BasketEntry> entries;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw std::invalid_argument("basket: expected '(' at position " +
                                        std::to_string(pos));
        std::size_t close = s.find(')', pos);
        std::size_t comma = s.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw std::invalid_argument("basket: malformed entry near position " +
                                        std::to_string(pos));
        auto to_int = [](const std::string& part) {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size())
                throw std::invalid_argument("basket: bad integer '" + part + "'");
            return static_cast<Int>(v);
        };
        Int r = to_int(s.substr(pos + 1, comma - pos - 1));
        Int v = to_int(s.substr(comma + 1, close - comma - 1));
        entries.emplace_back(r, v);
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != ',')
                throw std::invalid_argument("basket: expected ',' between entries");
            ++pos;
        }
    }
    return Basket(std::move(entries));
}

json make_envelope(const std::string& command, const json& inputs,
                   const json& result, const std::string& status) {
    return json{{"command", command},
                {"inputs", inputs},
                {"result", result},
                {"status", status}};
}

namespace {

void run_colength(Invocation& inv, Int l, Int m, bool brute) {
    if (l > 10'000'000)
        throw std::invalid_argument("colength: l capped at 10^7");
    if (brute && l > 5000)
        throw std::invalid_argument("colength: --brute enumerates a box, l capped at 5000");
    Int closed = colength_closed_form(l, m);
    inv.inputs = {{"l", l}, {"m", m}, {"brute", brute}};
    inv.result = {{"closed_form", closed}};
    inv.text << "colength(" << l << ", " << m << ") = " << closed << "\n";
    if (brute) {
        Int oracle = colength_bruteforce(WeightTriple(1, std::min(l, m), l), l);
        inv.result["bruteforce"] = oracle;
        inv.result["agree"] = (closed == oracle);
        inv.text << "bruteforce oracle   = " << oracle
                 << (closed == oracle ? "  (agree)" : "  (MISMATCH)") << "\n";
        if (closed != oracle)
            throw std::logic_error("closed form disagrees with the enumeration oracle");
    }
}

void run_ideal(Invocation& inv, Int wx, Int wy, Int wz, Int threshold) {
    if (threshold > 500)
        throw std::invalid_argument("ideal: threshold capped at 500");
    WeightTriple w(wx, wy, wz);
    MonomialIdeal ideal = valuation_ideal(w, threshold);
    CanonicalWeights canon = canonicalize(w);
    inv.inputs = {{"weights", {wx, wy, wz}}, {"threshold", threshold}};
    json gens = json::array();
    json pretty = json::array();
    for (const auto& g : ideal.generators) {
        gens.push_back(monomial_json(g));
        pretty.push_back(to_string(g));
    }
    inv.result = {
        {"generators", gens},
        {"generators_pretty", pretty},
        {"is_maximal_ideal", is_maximal_ideal(ideal)},
        {"inside_squared_maximal", inside_squared_maximal(ideal)},
        {"canonical_weights",
         {canon.weights.wx, canon.weights.wy, canon.weights.wz}},
        {"permutation", {canon.perm[0], canon.perm[1], canon.perm[2]}},
    };
    inv.text << "valuation ideal for weights (" << wx << "," << wy << "," << wz
             << "), threshold " << threshold << ":\n  generators:";
    for (const auto& g : ideal.generators)
        inv.text << " " << to_string(g);
    inv.text << "\n  equals maximal ideal:      "
             << (is_maximal_ideal(ideal) ? "yes" : "no")
             << "\n  inside squared maximal:    "
             << (inside_squared_maximal(ideal) ? "yes" : "no") << "\n";
    if (!w.sorted())
        inv.text << "  canonical weights: (" << canon.weights.wx << ","
                 << canon.weights.wy << "," << canon.weights.wz
                 << ") via permutation (" << canon.perm[0] << canon.perm[1]
                 << canon.perm[2] << ")\n";
}

void run_contrib(Invocation& inv, Int r, Int b, Int i) {
    QuotientSingularity q(r, b);
    Rational c = contribution(q, i);
    inv.inputs = {{"r", r}, {"b", b}, {"i", i}};
    inv.result = {{"contribution", c.str()},
                  {"i_residue", smallest_residue(i, r)}};
    inv.text << "c_Q(" << i << ") at 1/" << r << "(1,-1," << b << ") = " << c.str()
             << "\n";
}

void run_basket(Invocation& inv, const std::string& basket_text_arg, bool aE3_only,
                bool maxa_only, Int colengths_upto, bool dim_only) {
    Basket basket = parse_basket(basket_text_arg);
    inv.inputs = {{"basket", basket_text_arg}};
    json input_entries = json::array();
    for (const auto& e : basket.entries)
        input_entries.push_back({e.r, e.v_input});
    inv.result = {{"entries", basket_json(basket)},
                  {"entries_input", input_entries},
                  {"index", basket.index()}};
    inv.text << "basket " << basket_text(basket) << ", index " << basket.index()
             << "\n";

    bool everything = !aE3_only && !maxa_only && !dim_only && colengths_upto == 0;
    if (everything || aE3_only) {
        Rational aE3 = aE3_from_basket(basket);
        inv.result["aE3"] = aE3.str();
        inv.text << "  aE^3 = " << aE3.str() << "\n";
    }
    if (everything || maxa_only) {
        auto max_a = max_discrepancy(basket);
        inv.result["max_a"] = max_a ? json(*max_a) : json(nullptr);
        inv.text << "  max admissible discrepancy = "
                 << (max_a ? std::to_string(*max_a) : std::string("none")) << "\n";
    }
    if (everything || dim_only) {
        inv.result["m2_quotient_dim"] = m2_quotient_dim(basket);
        inv.text << "  dim f_*O(-2E)/m^2 = " << m2_quotient_dim(basket) << "\n";
    }
    if (colengths_upto > 10'000)
        throw std::invalid_argument("basket: --colengths capped at 10^4");
    if (colengths_upto > 0) {
        json cols = json::array();
        inv.text << "  colengths (Riemann-Roch route):\n";
        for (Int i = 1; i <= colengths_upto; ++i) {
            Int c = rr_colength(basket, i);
            cols.push_back({i, c});
            inv.text << "    i = " << i << ": " << c << "\n";
        }
        inv.result["colengths"] = cols;
    }
}

void run_wbu(Invocation& inv, Int a, Int b) {
    WbuProfile p = wbu_profile(a, b);
    inv.inputs = {{"a", a}, {"b", b}};
    json charts = json::array();
    for (const auto& c : p.charts) {
        json entry = {{"axis", std::string(1, "xyz"[c.axis])},
                      {"index", c.index},
                      {"raw_weights", {c.raw_weights[0], c.raw_weights[1], c.raw_weights[2]}}};
        entry["type"] = c.normalized ? json({c.normalized->r, c.normalized->b})
                                     : json(nullptr);
        charts.push_back(entry);
    }
    WeightTriple w(1, a, b);
    json cols = json::array();
    for (Int i = 1; i <= p.discrepancy; ++i)
        cols.push_back({i, rr_colength(p.basket, i), colength_bruteforce(w, i)});
    bool cond1 = !is_maximal_ideal(valuation_ideal(w, 2));
    bool cond2 = !inside_squared_maximal(valuation_ideal(w, b));
    inv.result = {{"a", a},
                  {"b", b},
                  {"discrepancy", p.discrepancy},
                  {"E3", p.E3.str()},
                  {"e", p.e},
                  {"charts", charts},
                  {"basket", basket_json(p.basket)},
                  {"colengths", cols},
                  {"threshold2_not_maximal", cond1},
                  {"final_threshold_not_in_m2", cond2}};
    inv.text << "weighted blow-up (1," << a << "," << b << ")\n"
             << "  discrepancy = " << p.discrepancy << "\n"
             << "  E^3 = " << p.E3.str() << "\n"
             << "  basket = " << basket_text(p.basket) << " (index "
             << p.basket.index() << ", e = " << p.e << ")\n"
             << "  charts:\n";
    for (const auto& c : p.charts) {
        inv.text << "    " << "xyz"[c.axis] << "-chart: 1/" << c.index << "("
                 << c.raw_weights[0] << "," << c.raw_weights[1] << ","
                 << c.raw_weights[2] << ")";
        if (c.normalized)
            inv.text << " = 1/" << c.normalized->r << "(1,-1," << c.normalized->b
                     << ")";
        inv.text << "\n";
    }
    inv.text << "  colengths i=1.." << p.discrepancy
             << " (Riemann-Roch = enumeration):\n";
    for (const auto& row : cols)
        inv.text << "    i = " << row[0].get<Int>() << ": " << row[1].get<Int>()
                 << (row[1] == row[2] ? "" : "  MISMATCH") << "\n";
    inv.text << "  f_*O(-2E) != m_P:        " << (cond1 ? "yes" : "NO") << "\n"
             << "  f_*O(-" << b << "E) !< m_P^2:     " << (cond2 ? "yes" : "NO")
             << "\n";
}

void run_tower(Invocation& inv, Int m, Int n) {
    TowerProfile t = tower_profile(m, n);
    inv.inputs = {{"m", m}, {"n", n}};
    json steps = json::array();
    inv.text << "blow-up tower for (m,n) = (" << m << "," << n
             << "), discrepancy " << t.discrepancy << ", n <= a-1 holds\n";
    for (const auto& s : t.steps) {
        steps.push_back({{"i", s.i},
                         {"center", s.kind == CenterKind::point ? "point" : "curve"},
                         {"weights", {s.weights.wx, s.weights.wy, s.weights.wz}},
                         {"discrepancy", s.discrepancy},
                         {"coeff_final_pullback", s.coeff_final_pullback}});
        inv.text << "  step " << s.i << ": "
                 << (s.kind == CenterKind::point ? "point" : "curve")
                 << " center, weights (1," << s.weights.wy << "," << s.weights.wz
                 << "), discrepancy " << s.discrepancy << ", coeff of F_n in pullback "
                 << s.coeff_final_pullback << "\n";
    }
    inv.result = {{"m", m},
                  {"n", n},
                  {"discrepancy", t.discrepancy},
                  {"steps", steps}};
}

void run_enumerate(Invocation& inv, Int s, Int r_max) {
    if (r_max > 40)
        throw std::invalid_argument("enumerate: rmax capped at 40 (desk scale)");
    EnumerationReport rep = enumerate_baskets(s, r_max);
    inv.inputs = {{"s", s}, {"r_max", r_max}};
    json rows = json::array();
    inv.text << "baskets with min-v sum " << s << ", entry indices <= " << r_max
             << ":\n";
    for (const auto& row : rep.rows) {
        json jrow = {{"basket", basket_json(row.basket)},
                     {"aE3", row.aE3.str()},
                     {"index", row.index},
                     {"max_a", row.max_a ? json(*row.max_a) : json(nullptr)},
                     {"family_truncated", row.family_truncated}};
        jrow["realized_by"] = row.realized_by
                                  ? json({row.realized_by->first, row.realized_by->second})
                                  : json(nullptr);
        rows.push_back(jrow);
        inv.text << "  " << basket_text(row.basket) << "  aE^3 = " << row.aE3.str()
                 << "  index " << row.index << "  max a = "
                 << (row.max_a ? std::to_string(*row.max_a) : std::string("none"));
        if (row.realized_by)
            inv.text << "  [weighted blow-up (1," << row.realized_by->first << ","
                     << row.realized_by->second << ")]";
        if (row.family_truncated)
            inv.text << "  [family, truncated]";
        inv.text << "\n";
    }
    json families = json::array();
    for (const auto& f : rep.family_notes) {
        json fixed = json::array();
        std::string fixed_text;
        for (const auto& e : f.fixed) {
            fixed.push_back({e.r, e.v});
            fixed_text += "(" + std::to_string(e.r) + "," + std::to_string(e.v) + "),";
        }
        families.push_back({{"fixed", fixed},
                            {"varied_v", f.varied_v},
                            {"rows_within_rmax", f.rows_within_rmax}});
        inv.text << "  family note: {" << fixed_text << "(r," << f.varied_v
                 << ")} continues for every admissible r > " << r_max << " ("
                 << f.rows_within_rmax << " rows shown)\n";
    }
    inv.result = {{"s", s},
                  {"r_max", r_max},
                  {"rows", rows},
                  {"families", families}};
}

void run_verify(Invocation& inv, Int r_max, bool& violation) {
    if (r_max > 40)
        throw std::invalid_argument("verify-paper: --rmax capped at 40 (desk scale)");
    VerificationReport rep = run_verification(r_max);
    inv.inputs = {{"r_max", r_max}};
    json criteria = json::array();
    for (const auto& c : rep.criteria) {
        criteria.push_back({{"number", c.number},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"cases", c.cases_checked},
                            {"detail", c.detail}});
        inv.text << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.name
                 << " (" << c.cases_checked << " cases)";
        if (!c.detail.empty())
            inv.text << " -- " << c.detail;
        inv.text << "\n";
    }
    inv.result = {{"criteria", criteria}, {"all_pass", rep.all_pass}};
    inv.text << (rep.all_pass ? "all criteria passed\n" : "FAILURES present\n");
    violation = !rep.all_pass;
}

} // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"invariants of weighted blow-ups of smooth 3-fold points", "wbu3"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the JSON envelope instead of text");

    Int l = 1, m = 1, wx = 1, wy = 1, wz = 1, threshold = 1, r = 2, b = 1, i = 0;
    Int a = 1, s_target = 0, r_max = 8, verify_rmax = 12, colengths_upto = 0;
    bool brute = false, want_aE3 = false, want_maxa = false, want_dim = false;
    std::string basket_arg;

    auto* c_col = app.add_subcommand("colength", "colength of (s + min{l,m}t + lu >= l)");
    c_col->add_option("l", l)->required();
    c_col->add_option("m", m)->required();
    c_col->add_flag("--brute", brute, "also run the enumeration oracle");

    auto* c_ideal = app.add_subcommand("ideal", "valuation ideal generators and flags");
    c_ideal->add_option("wx", wx)->required();
    c_ideal->add_option("wy", wy)->required();
    c_ideal->add_option("wz", wz)->required();
    c_ideal->add_option("i", threshold)->required();

    auto* c_contrib = app.add_subcommand("contrib", "Riemann-Roch contribution c_Q(iE)");
    c_contrib->add_option("r", r)->required();
    c_contrib->add_option("b", b)->required();
    c_contrib->add_option("i", i)->required();

    auto* c_basket = app.add_subcommand("basket", "evaluate basket invariants");
    c_basket->add_option("entries", basket_arg,
                         "entries \"(r1,v1),(r2,v2),...\"; \"-\" for empty")
        ->required();
    c_basket->add_flag("--aE3", want_aE3, "only aE^3");
    c_basket->add_flag("--maxa", want_maxa, "only the maximal admissible discrepancy");
    c_basket->add_option("--colengths", colengths_upto, "print colengths for i = 1..I");
    c_basket->add_flag("--dimD", want_dim, "only dim f_*O(-2E)/m^2");

    auto* c_wbu = app.add_subcommand("wbu", "full profile of the (1,a,b) weighted blow-up");
    c_wbu->add_option("a", a)->required();
    c_wbu->add_option("b", b)->required();

    auto* c_tower = app.add_subcommand("tower", "point/curve blow-up tower for (m,n)");
    c_tower->add_option("m", m)->required();
    c_tower->add_option("n", l)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all baskets with given min-v sum");
    c_enum->add_option("s", s_target)->required();
    c_enum->add_option("rmax", r_max)->required();

    auto* c_verify = app.add_subcommand("verify-paper", "run the full identity suite");
    c_verify->add_option("--rmax", verify_rmax, "extend certificate sweeps (>= 12)");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << "\n";
        if (as_json)
            out << make_envelope("", json::object(), {{"message", e.what()}}, "error")
                       .dump(2)
                << "\n";
        return exit_usage;
    }

    Invocation inv;
    inv.command = app.get_subcommands().front()->get_name();
    bool violation = false;
    try {
        if (c_col->parsed())
            run_colength(inv, l, m, brute);
        else if (c_ideal->parsed())
            run_ideal(inv, wx, wy, wz, threshold);
        else if (c_contrib->parsed())
            run_contrib(inv, r, b, i);
        else if (c_basket->parsed())
            run_basket(inv, basket_arg, want_aE3, want_maxa, colengths_upto, want_dim);
        else if (c_wbu->parsed())
            run_wbu(inv, a, b);
        else if (c_tower->parsed())
            run_tower(inv, m, l);
        else if (c_enum->parsed())
            run_enumerate(inv, s_target, r_max);
        else if (c_verify->parsed())
            run_verify(inv, verify_rmax, violation);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        if (as_json)
            out << make_envelope(inv.command, inv.inputs, {{"message", e.what()}},
                                 "error")
                       .dump(2)
                << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        // Domain preconditions and internal cross-checks: report the failing
        // assertion with its operands and exit 1.
        if (as_json)
            out << make_envelope(inv.command, inv.inputs, {{"assertion", e.what()}},
                                 "violation")
                       .dump(2)
                << "\n";
        else
            err << "violation: " << e.what() << "\n";
        return exit_violation;
    }

    if (as_json)
        out << make_envelope(inv.command, inv.inputs, inv.result,
                             violation ? "violation" : "ok")
                   .dump(2)
            << "\n";
    else
        out << inv.text.str();
    return violation ? exit_violation : exit_ok;
}

} // namespace wbu3::cli

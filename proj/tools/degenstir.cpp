// degenstir: exact tables, single values, and identity verification for
// Stirling / degenerate-Stirling / Bernoulli-Euler / Whitney families.
// All arithmetic is over exact rationals; output is canonical text,
// CSV, or JSON, and is byte-deterministic for identical requests.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degenstir/degenstir.hpp"

namespace {

using namespace degenstir;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// request state shared by the three subcommands

struct Options {
    std::string family;
    std::string identity;
    long long n = 0;
    long long k = -1;  // -1: not provided
    unsigned n_max = 0;
    long long k_max = -1;  // -1: default to n_max
    unsigned m = 1;
    unsigned r = 0;
    unsigned order_r = 1;
    std::string x_str;
    std::string lambda_str;
    std::string format = "text";
    unsigned jobs = 1;
    bool unicode = false;

    bool m_set = false;
    bool r_set = false;
    bool order_r_set = false;
    std::optional<Rational> x_sub;
    std::optional<Rational> lambda_sub;
};

constexpr unsigned kVerifyOrderUnset = 0xffffffffu;

// ---------------------------------------------------------------------------
// family registry

enum class Family {
    s1,
    s2,
    s2poly,
    s2lambda,
    bernoulli,
    euler,
    euler_number,
    deg_bernoulli,
    deg_euler,
    whitney,
    whitney_deg,
};

struct FamilyInfo {
    Family fam;
    bool triangle;      // tabulated over (n,k); sequence families are eval-only
    bool whitney_args;  // consumes --m/--r
    bool takes_order_r;
};

const std::map<std::string, FamilyInfo>& family_registry() {
    static const std::map<std::string, FamilyInfo> reg = {
        {"s1", {Family::s1, true, false, false}},
        {"s2", {Family::s2, true, false, false}},
        {"s2poly", {Family::s2poly, true, false, false}},
        {"s2lambda", {Family::s2lambda, true, false, false}},
        {"bernoulli", {Family::bernoulli, false, false, false}},
        {"euler", {Family::euler, false, false, false}},
        {"euler-number", {Family::euler_number, false, false, false}},
        {"deg-bernoulli", {Family::deg_bernoulli, false, false, false}},
        {"deg-euler", {Family::deg_euler, false, false, true}},
        {"whitney", {Family::whitney, true, true, false}},
        {"whitney-deg", {Family::whitney_deg, true, true, false}},
    };
    return reg;
}

std::vector<std::string> family_names() {
    std::vector<std::string> names;
    for (const auto& [name, info] : family_registry()) names.push_back(name);
    return names;
}

MultiPoly family_value(const FamilyInfo& info, unsigned n, unsigned k, const Options& opt) {
    const WhitneyParams p{opt.m, opt.r};
    switch (info.fam) {
        case Family::s1: return MultiPoly(stirling1(n, k));
        case Family::s2: return MultiPoly(stirling2(n, k));
        case Family::s2poly: return stirling2_poly(n, k);
        case Family::s2lambda: return deg_stirling2(n, k);
        case Family::bernoulli: return bernoulli_poly(n);
        case Family::euler: return euler_poly(n);
        case Family::euler_number: return MultiPoly(euler_number_from_s2(n));
        case Family::deg_bernoulli: return deg_bernoulli(n);
        case Family::deg_euler: return deg_euler_higher(n, opt.order_r);
        case Family::whitney: return MultiPoly(whitney(n, k, p));
        case Family::whitney_deg: return deg_whitney(n, k, p);
    }
    throw std::invalid_argument("unknown family");
}

std::string render(const MultiPoly& value, const Options& opt) {
    return value.specialize(opt.x_sub, opt.lambda_sub).str(opt.unicode);
}

// ---------------------------------------------------------------------------
// output formats

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

struct TableRow {
    unsigned n;
    unsigned k;
    std::string value;
};

void print_table(const FamilyInfo& info, const std::vector<TableRow>& rows, const Options& opt) {
    if (opt.format == "text") {
        for (const auto& row : rows)
            std::cout << row.n << '\t' << row.k << '\t' << row.value << '\n';
        return;
    }
    if (opt.format == "csv") {
        std::cout << "n,k,value\n";
        for (const auto& row : rows)
            std::cout << row.n << ',' << row.k << ',' << csv_field(row.value) << '\n';
        return;
    }
    ordered_json doc;
    doc["family"] = opt.family;
    ordered_json params;
    params["n_max"] = opt.n_max;
    params["k_max"] = static_cast<unsigned>(opt.k_max);
    if (info.whitney_args) {
        params["m"] = opt.m;
        params["r"] = opt.r;
    }
    if (info.takes_order_r) params["order_r"] = opt.order_r;
    if (opt.x_sub) params["x"] = opt.x_sub->str();
    if (opt.lambda_sub) params["lambda"] = opt.lambda_sub->str();
    doc["params"] = params;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows)
        jrows.push_back(ordered_json{{"n", row.n}, {"k", row.k}, {"value", row.value}});
    doc["rows"] = jrows;
    std::cout << doc.dump() << '\n';
}

// ---------------------------------------------------------------------------
// table / eval

int cmd_table(const Options& opt) {
    const FamilyInfo& info = family_registry().at(opt.family);
    if (!info.triangle) {
        std::cerr << "family '" << opt.family << "' does not support tabulation; use eval\n";
        return 2;
    }
    Options local = opt;
    if (local.k_max < 0) local.k_max = local.n_max;
    std::vector<TableRow> rows;
    for (unsigned n = 0; n <= local.n_max; ++n)
        for (unsigned k = 0; k <= std::min<unsigned>(n, static_cast<unsigned>(local.k_max)); ++k)
            rows.push_back({n, k, render(family_value(info, n, k, local), local)});
    print_table(info, rows, local);
    return 0;
}

int cmd_eval(const Options& opt) {
    const FamilyInfo& info = family_registry().at(opt.family);
    if (info.triangle && opt.k < 0) {
        std::cerr << "family '" << opt.family << "' needs --k\n";
        return 2;
    }
    const unsigned k = info.triangle ? static_cast<unsigned>(opt.k) : 0;
    std::cout << render(family_value(info, static_cast<unsigned>(opt.n), k, opt), opt) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Cell {
    std::string label;
    std::function<std::optional<std::string>()> run;
};

std::optional<std::string> expect_equal(const MultiPoly& a, const MultiPoly& b, bool unicode) {
    if (a == b) return std::nullopt;
    return a.str(unicode) + " != " + b.str(unicode);
}

// (m,r) combinations: the acceptance grid {1,2,3} x {0,1,2} unless the user
// pinned either value.
std::vector<WhitneyParams> whitney_grid(const Options& opt) {
    if (opt.m_set || opt.r_set) return {WhitneyParams{opt.m, opt.r}};
    std::vector<WhitneyParams> grid;
    for (unsigned m : {1u, 2u, 3u})
        for (unsigned r : {0u, 1u, 2u}) grid.push_back(WhitneyParams{m, r});
    return grid;
}

std::vector<unsigned> order_r_grid(const Options& opt) {
    if (opt.order_r_set) return {opt.order_r};
    return {1u, 2u, 3u, 4u};
}

std::string cell_label(std::initializer_list<std::pair<const char*, long long>> parts) {
    std::string label;
    for (const auto& [name, value] : parts) {
        if (!label.empty()) label += " ";
        label += std::string(name) + "=" + std::to_string(value);
    }
    return label;
}

MultiPoly deg_stirling_gf_value(unsigned n, unsigned k) {
    const auto column = deg_stirling2_gf(n, k);
    return column.empty() ? MultiPoly() : column.back();
}

std::vector<Cell> cells_thm1(unsigned N, bool uni) {
    std::vector<Cell> cells;
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= n; ++k)
            cells.push_back({cell_label({{"n", n}, {"k", k}}), [n, k, uni] {
                                 return expect_equal(deg_stirling2(n, k),
                                                     deg_stirling_gf_value(n, k), uni);
                             }});
    return cells;
}

std::vector<Cell> cells_thm2(unsigned N, bool uni) {
    std::vector<Cell> cells;
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= n; ++k)
            cells.push_back({cell_label({{"n", n}, {"k", k}}), [n, k, uni] {
                                 return expect_equal(deg_stirling2_via_s1(n, k),
                                                     deg_stirling_gf_value(n, k), uni);
                             }});
    return cells;
}

std::vector<Cell> cells_thm3(unsigned N, bool uni) {
    std::vector<Cell> cells;
    for (unsigned n = 1; n <= N; ++n)
        for (unsigned k = 1; k <= n; ++k)
            cells.push_back({cell_label({{"n", n}, {"k", k}}), [n, k, uni]() -> std::optional<std::string> {
                                 const MultiPoly x = MultiPoly::var_x();
                                 const MultiPoly lambda = MultiPoly::var_lambda();
                                 const MultiPoly cur = deg_stirling2(n, k);
                                 const MultiPoly rhs =
                                     (x + MultiPoly(Rational(static_cast<long long>(k)))) * cur +
                                     deg_stirling2(n, k - 1) -
                                     lambda * Rational(static_cast<long long>(n)) * cur;
                                 if (auto err = expect_equal(deg_stirling2(n + 1, k), rhs, uni))
                                     return err;
                                 // lambda -> 0 collapses to the classical polynomial
                                 return expect_equal(cur.specialize(std::nullopt, Rational(0)),
                                                     stirling2_poly(n, k), uni);
                             }});
    return cells;
}

std::vector<Cell> cells_thm4(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;
    for (unsigned r : order_r_grid(opt))
        for (unsigned n = 0; n <= N; ++n)
            cells.push_back({cell_label({{"n", n}, {"r", r}}), [n, r, uni] {
                                 return expect_equal(deg_euler_closed(n, r),
                                                     deg_euler_higher(n, r), uni);
                             }});
    return cells;
}

std::vector<Cell> cells_thm5(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned k = 0; k <= n; ++k)
                cells.push_back(
                    {cell_label({{"n", n}, {"k", k}, {"m", p.m}, {"r", p.r}}),
                     [n, k, p]() -> std::optional<std::string> {
                         const Rational sum = whitney(n, k, p);
                         const Rational diff = whitney_via_difference(n, k, p);
                         const gf::SeriesFamily fam{gf::SeriesTag::whitney_gf, k, p.m, p.r, 1};
                         const Rational gfv = gf::build(fam, n).coeff(n).constant_value();
                         if (sum != diff) return sum.str() + " != " + diff.str() + " (difference route)";
                         if (sum != gfv) return sum.str() + " != " + gfv.str() + " (series route)";
                         return std::nullopt;
                     }});
    return cells;
}

std::vector<Cell> cells_thm6(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned k = 0; k <= n; ++k)
                cells.push_back(
                    {cell_label({{"n", n}, {"k", k}, {"m", p.m}, {"r", p.r}}),
                     [n, k, p, uni]() -> std::optional<std::string> {
                         const MultiPoly closed = deg_whitney(n, k, p);
                         const gf::SeriesFamily fam{gf::SeriesTag::deg_whitney_gf, k, p.m, p.r, 1};
                         if (auto err = expect_equal(closed, gf::build(fam, n).coeff(n), uni))
                             return err;
                         // lambda -> 0 recovers the plain r-Whitney number
                         return expect_equal(closed.specialize(std::nullopt, Rational(0)),
                                             MultiPoly(whitney(n, k, p)), uni);
                     }});
    return cells;
}

std::vector<Cell> cells_thm7(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned k = 0; k <= n; ++k)
                cells.push_back(
                    {cell_label({{"n", n}, {"k", k}, {"m", p.m}, {"r", p.r}}), [n, k, p, uni] {
                         const gf::SeriesFamily fam{gf::SeriesTag::deg_whitney_gf, k, p.m, p.r, 1};
                         return expect_equal(deg_whitney_via_s1(n, k, p),
                                             gf::build(fam, n).coeff(n), uni);
                     }});
    return cells;
}

std::vector<Cell> cells_thm8(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned k = 1; k <= n; ++k)
                cells.push_back(
                    {cell_label({{"n", n}, {"k", k}, {"m", p.m}, {"r", p.r}}), [n, k, p, uni] {
                         const MultiPoly lambda = MultiPoly::var_lambda();
                         const MultiPoly cur = deg_whitney(n, k, p);
                         const Rational head(static_cast<long long>(p.r) +
                                             static_cast<long long>(p.m) * k);
                         const MultiPoly rhs = cur * head + deg_whitney(n, k - 1, p) -
                                               lambda * Rational(static_cast<long long>(n)) * cur;
                         return expect_equal(deg_whitney(n + 1, k, p), rhs, uni);
                     }});
    return cells;
}

std::vector<Cell> cells_eq31(unsigned N, bool uni) {
    std::vector<Cell> cells;
    for (unsigned n = 1; n <= N; ++n)
        for (unsigned k = 1; k <= n; ++k)
            cells.push_back({cell_label({{"n", n}, {"k", k}}), [n, k, uni] {
                                 const MultiPoly x = MultiPoly::var_x();
                                 const MultiPoly rhs =
                                     (x + MultiPoly(Rational(static_cast<long long>(k)))) *
                                         stirling2_poly(n, k) +
                                     stirling2_poly(n, k - 1);
                                 return expect_equal(stirling2_poly(n + 1, k), rhs, uni);
                             }});
    return cells;
}

std::vector<Cell> cells_eq40(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned k = 1; k <= n; ++k)
                cells.push_back(
                    {cell_label({{"n", n}, {"k", k}, {"m", p.m}, {"r", p.r}}),
                     [n, k, p]() -> std::optional<std::string> {
                         const Rational head(static_cast<long long>(p.r) +
                                             static_cast<long long>(p.m) * k);
                         const Rational rhs = head * whitney(n, k, p) + whitney(n, k - 1, p);
                         const Rational lhs = whitney(n + 1, k, p);
                         if (lhs == rhs) return std::nullopt;
                         return lhs.str() + " != " + rhs.str();
                     }});
    return cells;
}

std::vector<Cell> cells_eq13(unsigned N) {
    std::vector<Cell> cells;
    for (unsigned n = 0; n <= N; ++n)
        cells.push_back({cell_label({{"n", n}}), [n]() -> std::optional<std::string> {
                             const Rational lhs = euler_number_from_s2(n);
                             const Rational rhs =
                                 euler_poly(n).specialize(Rational(0), std::nullopt).constant_value();
                             if (lhs == rhs) return std::nullopt;
                             return lhs.str() + " != " + rhs.str();
                         }});
    return cells;
}

std::vector<Cell> cells_eq34(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;
    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned n = 0; n <= N; ++n)
            cells.push_back({cell_label({{"n", n}, {"m", p.m}, {"r", p.r}}), [n, p, uni] {
                                 const auto [lhs, rhs] = whitney_basis_identity(n, p);
                                 return expect_equal(lhs, rhs, uni);
                             }});
    return cells;
}

std::vector<Cell> cells_vandermonde(unsigned N, bool uni) {
    std::vector<Cell> cells;
    for (unsigned n = 0; n <= N; ++n)
        cells.push_back({cell_label({{"n", n}}), [n, uni]() -> std::optional<std::string> {
                             // Agreement at deg+1 sample values of y proves the
                             // two-variable identity on the bivariate ring.
                             for (unsigned j = 0; j <= n; ++j) {
                                 const MultiPoly y(Rational(static_cast<long long>(j), 2));
                                 const auto [sum, direct] =
                                     chu_vandermonde_lambda(MultiPoly::var_x(), y, n);
                                 if (auto err = expect_equal(sum, direct, uni)) {
                                     return "y=" + Rational(static_cast<long long>(j), 2).str() +
                                            ": " + *err;
                                 }
                             }
                             return std::nullopt;
                         }});
    return cells;
}

std::vector<Cell> cells_gf_master(unsigned N, const Options& opt) {
    std::vector<Cell> cells;
    const bool uni = opt.unicode;

    auto column_cell = [&](const char* name, gf::SeriesTag tag, unsigned k,
                           std::function<MultiPoly(unsigned, unsigned)> closed) {
        cells.push_back({std::string("family=") + name + " k=" + std::to_string(k),
                         [tag, k, N, closed, uni]() -> std::optional<std::string> {
                             const auto coeffs = gf::coefficients({tag, k}, N);
                             for (unsigned n = 0; n <= N; ++n)
                                 if (auto err = expect_equal(coeffs[n], closed(n, k), uni))
                                     return "n=" + std::to_string(n) + ": " + *err;
                             return std::nullopt;
                         }});
    };

    for (unsigned k = 0; k <= 8; ++k) {
        column_cell("stirling1_gf", gf::SeriesTag::stirling1_gf, k,
                    [](unsigned n, unsigned kk) { return MultiPoly(stirling1(n, kk)); });
        column_cell("stirling2_gf", gf::SeriesTag::stirling2_gf, k,
                    [](unsigned n, unsigned kk) { return MultiPoly(stirling2(n, kk)); });
        column_cell("stirling2_poly_gf", gf::SeriesTag::stirling2_poly_gf, k,
                    [](unsigned n, unsigned kk) { return stirling2_poly(n, kk); });
        column_cell("deg_stirling2_gf", gf::SeriesTag::deg_stirling2_gf, k,
                    [](unsigned n, unsigned kk) { return deg_stirling2(n, kk); });
    }

    auto sequence_cell = [&](const std::string& name, gf::SeriesFamily fam,
                             std::function<MultiPoly(unsigned)> closed, std::string label_extra) {
        cells.push_back({"family=" + name + label_extra,
                         [fam, N, closed, uni]() -> std::optional<std::string> {
                             const auto coeffs = gf::coefficients(fam, N);
                             for (unsigned n = 0; n <= N; ++n)
                                 if (auto err = expect_equal(coeffs[n], closed(n), uni))
                                     return "n=" + std::to_string(n) + ": " + *err;
                             return std::nullopt;
                         }});
    };

    sequence_cell("bernoulli_gf", {gf::SeriesTag::bernoulli_gf},
                  [](unsigned n) { return bernoulli_poly(n); }, "");
    sequence_cell("euler_gf", {gf::SeriesTag::euler_gf},
                  [](unsigned n) { return euler_poly(n); }, "");
    sequence_cell("deg_bernoulli_gf", {gf::SeriesTag::deg_bernoulli_gf},
                  [](unsigned n) { return deg_bernoulli(n); }, "");
    for (unsigned r : order_r_grid(opt)) {
        gf::SeriesFamily fam{gf::SeriesTag::deg_euler_r_gf};
        fam.order_r = r;
        sequence_cell("deg_euler_r_gf", fam,
                      [r](unsigned n) { return deg_euler_higher(n, r); },
                      " order_r=" + std::to_string(r));
    }

    for (const WhitneyParams p : whitney_grid(opt))
        for (unsigned k = 0; k <= 8; ++k) {
            const std::string label = " m=" + std::to_string(p.m) + " r=" + std::to_string(p.r);
            gf::SeriesFamily wf{gf::SeriesTag::whitney_gf, k, p.m, p.r, 1};
            sequence_cell("whitney_gf k=" + std::to_string(k), wf,
                          [k, p](unsigned n) { return MultiPoly(whitney(n, k, p)); }, label);
            gf::SeriesFamily dwf{gf::SeriesTag::deg_whitney_gf, k, p.m, p.r, 1};
            sequence_cell("deg_whitney_gf k=" + std::to_string(k), dwf,
                          [k, p](unsigned n) { return deg_whitney(n, k, p); }, label);
        }

    return cells;
}

int run_cells(std::vector<Cell> cells, unsigned jobs) {
    std::vector<std::optional<std::string>> results(cells.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) results[i] = cells[i].run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < cells.size(); i += jobs) results[i] = cells[i].run();
            });
        for (auto& t : pool) t.join();
    }
    size_t failures = 0;
    const Cell* first_cell = nullptr;
    const std::string* first_detail = nullptr;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (!results[i]) continue;
        ++failures;
        if (!first_cell) {
            first_cell = &cells[i];
            first_detail = &*results[i];
        }
    }
    if (failures == 0) {
        std::cout << "PASS " << cells.size() << " cells\n";
        return 0;
    }
    std::cout << "FAIL " << failures << " of " << cells.size() << " cells\n";
    std::cout << "first counterexample: " << first_cell->label << ": " << *first_detail << "\n";
    return 1;
}

unsigned identity_default_order(const std::string& identity) {
    static const std::map<std::string, unsigned> defaults = {
        {"thm1", 12}, {"thm2", 12}, {"thm3", 12}, {"thm4", 10},       {"thm5", 10},
        {"thm6", 10}, {"thm7", 10}, {"thm8", 10}, {"eq31", 12},       {"eq40", 10},
        {"eq13", 12}, {"eq34", 8},  {"vandermonde", 10}, {"gf-master", 12},
    };
    return defaults.at(identity);
}

// Grid-size precedence: --n-max flag, then DEGENSTIR_ORDER, then the
// identity's acceptance-grid default.
std::optional<unsigned> env_order(int& rc) {
    const char* env = std::getenv("DEGENSTIR_ORDER");
    if (env == nullptr || *env == '\0') return std::nullopt;
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    const auto [p, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || p != end || value > 32) {
        std::cerr << "DEGENSTIR_ORDER must be an integer in [0, 32]\n";
        rc = 2;
        return std::nullopt;
    }
    return value;
}

int cmd_verify(const Options& opt, unsigned n_max_flag) {
    unsigned N = identity_default_order(opt.identity);
    if (n_max_flag != kVerifyOrderUnset) {
        N = n_max_flag;
    } else {
        int rc = 0;
        if (const auto env = env_order(rc)) N = *env;
        else if (rc != 0) return rc;
    }
    std::vector<Cell> cells;
    if (opt.identity == "thm1") cells = cells_thm1(N, opt.unicode);
    else if (opt.identity == "thm2") cells = cells_thm2(N, opt.unicode);
    else if (opt.identity == "thm3") cells = cells_thm3(N, opt.unicode);
    else if (opt.identity == "thm4") cells = cells_thm4(N, opt);
    else if (opt.identity == "thm5") cells = cells_thm5(N, opt);
    else if (opt.identity == "thm6") cells = cells_thm6(N, opt);
    else if (opt.identity == "thm7") cells = cells_thm7(N, opt);
    else if (opt.identity == "thm8") cells = cells_thm8(N, opt);
    else if (opt.identity == "eq31") cells = cells_eq31(N, opt.unicode);
    else if (opt.identity == "eq40") cells = cells_eq40(N, opt);
    else if (opt.identity == "eq13") cells = cells_eq13(N);
    else if (opt.identity == "eq34") cells = cells_eq34(N, opt);
    else if (opt.identity == "vandermonde") cells = cells_vandermonde(N, opt.unicode);
    else if (opt.identity == "gf-master") cells = cells_gf_master(N, opt);
    else {
        std::cerr << "unknown identity '" << opt.identity << "'\n";
        return 2;
    }
    return run_cells(std::move(cells), opt.jobs);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    unsigned verify_n_max = kVerifyOrderUnset;

    CLI::App app{"exact Stirling / degenerate-Stirling / Bernoulli-Euler / Whitney calculator"};
    app.require_subcommand(1);

    const std::vector<std::string> identities = {"thm1", "thm2", "thm3", "thm4",        "thm5",
                                                 "thm6", "thm7", "thm8", "eq31",        "eq40",
                                                 "eq13", "eq34", "vandermonde", "gf-master"};

    auto add_shared = [&](CLI::App* cmd, bool with_family) {
        if (with_family)
            cmd->add_option("--family", opt.family, "family tag")
                ->required()
                ->check(CLI::IsMember(family_names()));
        cmd->add_option("--m", opt.m, "Whitney block weight (>= 1)")->check(CLI::Range(1u, 1u << 20));
        cmd->add_option("--r", opt.r, "Whitney shift (>= 0)");
        cmd->add_option("--order-r", opt.order_r, "order of the degenerate Euler family (>= 1)")
            ->check(CLI::Range(1u, 64u));
        cmd->add_option("--x", opt.x_str, "substitute x = p/q before rendering");
        cmd->add_option("--lambda", opt.lambda_str, "substitute lambda = p/q before rendering");
        cmd->add_flag("--unicode", opt.unicode, "render lambda with the Greek letter");
    };

    CLI::App* table = app.add_subcommand("table", "tabulate a triangle family over n,k");
    add_shared(table, true);
    table->add_option("--n-max", opt.n_max, "largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--k-max", opt.k_max, "largest k (default: n-max)")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    table->add_option("--jobs", opt.jobs, "ignored outside verify")->check(CLI::Range(1u, 256u));

    CLI::App* eval = app.add_subcommand("eval", "print one value in canonical form");
    add_shared(eval, true);
    eval->add_option("--n", opt.n, "index n")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--k", opt.k, "index k (triangle families)")->check(CLI::NonNegativeNumber);
    eval->add_option("--format", opt.format, "ignored: eval prints the bare value")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    eval->add_option("--jobs", opt.jobs, "ignored outside verify")->check(CLI::Range(1u, 256u));

    CLI::App* verify = app.add_subcommand("verify", "machine-check one identity over its grid");
    verify->add_option("--identity", opt.identity, "identity tag")
        ->required()
        ->check(CLI::IsMember(identities));
    add_shared(verify, false);
    verify->add_option("--n-max", verify_n_max, "grid size (default: DEGENSTIR_ORDER, else the identity's own)")
        ->check(CLI::Range(0u, 32u));
    verify->add_option("--format", opt.format, "ignored: verify prints a summary line")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--jobs", opt.jobs, "shard verification cells across N workers")
        ->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        opt.m_set = cmd->count("--m") > 0;
        opt.r_set = cmd->count("--r") > 0;
        opt.order_r_set = cmd->count("--order-r") > 0;
        if (cmd->count("--x")) opt.x_sub = Rational::parse(opt.x_str);
        if (cmd->count("--lambda")) opt.lambda_sub = Rational::parse(opt.lambda_str);

        if (cmd == table) return cmd_table(opt);
        if (cmd == eval) return cmd_eval(opt);
        return cmd_verify(opt, verify_n_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

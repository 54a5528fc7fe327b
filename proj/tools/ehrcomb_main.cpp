// Command-line surface: number sequences, Ehrhart data for poset specs,
// verification suites, and the exploratory pyramid table.
#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ehrcomb/identities.hpp"
#include "ehrcomb/poset_spec.hpp"
#include "ehrcomb/serialize.hpp"

namespace {

using namespace ehrcomb;

enum class Command { numbers, ehrhart, verify, explore };
enum class Format { text, json_lines, csv };

struct RunConfig {
    Command command = Command::verify;
    int max_n = 4;
    int max_k = 6;
    int n = -1;
    int k = -1;
    int r = -1;
    std::string poset_spec;
    Format format = Format::text;
    int enumeration_cap = 8; // word-enumeration gate
    int brute_cap = 7;       // largest poset counted by brute force
    int threads = 1;
};

int threads_from_env() {
    const char* env = std::getenv("EHRCOMB_THREADS");
    if (env == nullptr)
        return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

// ---- report execution -------------------------------------------------

using Job = std::function<IdentityReport()>;

IdentityReport guarded(const Job& job) {
    try {
        return job();
    } catch (const Error& e) {
        IdentityReport rep;
        rep.name = "error";
        rep.lhs = e.what();
        rep.lhs_path = "exception while running the suite";
        rep.pass = false;
        return rep;
    }
}

// Fixed job order with results collected by slot, so output does not depend
// on the thread count.
std::vector<IdentityReport> run_jobs(const std::vector<Job>& jobs, int threads) {
    std::vector<IdentityReport> out(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            out[i] = guarded(jobs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size())
                return;
            out[i] = guarded(jobs[i]);
        }
    };
    std::size_t pool_size = std::min(static_cast<std::size_t>(threads), jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (std::size_t t = 0; t < pool_size; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    return out;
}

// ---- rendering ---------------------------------------------------------

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_csv(const std::vector<IdentityReport>& reports, std::ostream& os) {
    os << "name,params,lhs,rhs,lhs_path,rhs_path,pass\n";
    for (const IdentityReport& r : reports)
        os << csv_quote(r.name) << ',' << csv_quote(r.params) << ',' << csv_quote(r.lhs) << ','
           << csv_quote(r.rhs) << ',' << csv_quote(r.lhs_path) << ',' << csv_quote(r.rhs_path)
           << ',' << (r.pass ? "true" : "false") << '\n';
}

void render_json(const std::vector<IdentityReport>& reports, std::ostream& os) {
    json arr = json::array();
    for (const IdentityReport& r : reports)
        arr.push_back(r);
    os << arr.dump(2) << '\n';
}

void render_text(const std::vector<IdentityReport>& reports, std::ostream& os) {
    const char* headers[5] = {"result", "name", "params", "lhs", "rhs"};
    std::size_t w[5];
    for (int c = 0; c < 5; ++c)
        w[c] = std::string(headers[c]).size();
    auto cell = [](const IdentityReport& r, int c) -> std::string {
        switch (c) {
        case 0: return r.pass ? "ok" : "FAIL";
        case 1: return r.name;
        case 2: return r.params;
        case 3: return r.lhs;
        default: return r.rhs;
        }
    };
    for (const IdentityReport& r : reports)
        for (int c = 0; c < 5; ++c)
            w[c] = std::max(w[c], cell(r, c).size());
    auto row = [&](const std::string& a, const std::string& b, const std::string& c,
                   const std::string& d, const std::string& e) {
        const std::string* cells[5] = {&a, &b, &c, &d, &e};
        for (int i = 0; i < 5; ++i) {
            os << *cells[i];
            if (i < 4)
                os << std::string(w[i] - cells[i]->size() + 2, ' ');
        }
        os << '\n';
    };
    row(headers[0], headers[1], headers[2], headers[3], headers[4]);
    int failed = 0;
    for (const IdentityReport& r : reports) {
        row(cell(r, 0), cell(r, 1), cell(r, 2), cell(r, 3), cell(r, 4));
        if (!r.pass)
            ++failed;
    }
    os << reports.size() << " reports, " << failed << " failed\n";
    for (const IdentityReport& r : reports)
        if (!r.pass)
            os << "FAIL " << r.name << (r.params.empty() ? "" : " " + r.params)
               << "\n  lhs (" << r.lhs_path << "): " << r.lhs
               << "\n  rhs (" << r.rhs_path << "): " << r.rhs << '\n';
}

void render(const std::vector<IdentityReport>& reports, Format format, std::ostream& os) {
    switch (format) {
    case Format::text: render_text(reports, os); break;
    case Format::json_lines: render_json(reports, os); break;
    case Format::csv: render_csv(reports, os); break;
    }
}

// ---- verify ------------------------------------------------------------

struct SuiteSelection {
    bool bernoulli = false;
    bool comb_counts = false;
    bool comb_hstar = false;
    bool comb_coeffs = false;
    bool general_comb = false;
    bool coeff_formulas = false;
    bool order_basics = false;
    bool fast_path = false;
    bool interior = false;
    bool rgf = false;
    bool stirling = false;
    bool pyramid = false;

    bool any() const {
        return bernoulli || comb_counts || comb_hstar || comb_coeffs || general_comb ||
               coeff_formulas || order_basics || fast_path || interior || rgf || stirling ||
               pyramid;
    }
    void select_all() {
        bernoulli = comb_counts = comb_hstar = comb_coeffs = general_comb = coeff_formulas =
            order_basics = fast_path = interior = rgf = stirling = pyramid = true;
    }
};

std::vector<Job> build_jobs(const RunConfig& cfg, const SuiteSelection& sel) {
    std::vector<Job> jobs;
    auto add = [&](Job job) { jobs.push_back(std::move(job)); };

    if (sel.bernoulli)
        for (int n = 1; n <= cfg.max_n; ++n) {
            add([n, t = cfg.enumeration_cap] { return verify_bernoulli_descent_sum(n, t); });
            add([n, t = cfg.enumeration_cap] { return verify_bernoulli_harmonic_sum(n, t); });
        }

    if (sel.comb_counts)
        for (int n = 0; n <= cfg.max_n; ++n)
            for (int k = 1; k <= cfg.max_k; ++k)
                add([n, k, c = cfg.brute_cap] { return verify_comb_count_agreement(n, k, c); });

    if (sel.comb_hstar)
        for (int n = 1; n <= cfg.max_n; ++n)
            add([n, t = cfg.enumeration_cap] { return verify_comb_hstar_three_way(n, t); });

    if (sel.comb_coeffs)
        for (int n = 1; n <= cfg.max_n; ++n)
            add([n] { return verify_comb_linear_coeffs_bernoulli(n); });

    if (sel.general_comb) {
        const std::vector<std::pair<std::string, Poset>> parts = {
            {"chain:1", make_chain(1)},
            {"chain:2", make_chain(2)},
            {"antichain:2", make_antichain(2)},
        };
        for (const auto& [pname, part] : parts)
            for (int n = 1; n * (part.size() + 1) <= cfg.brute_cap; ++n)
                add([name = pname, p = part, n, c = cfg.brute_cap] {
                    return verify_general_comb(name, p, n, c);
                });
        for (int n = 1; n <= cfg.max_n; ++n)
            add([n] { return verify_antichain_comb_coeffs(n); });
    }

    if (sel.coeff_formulas) {
        for (int d = 1; d <= cfg.max_n; ++d)
            add([d] {
                return verify_coeff_formulas_random(d, 50, 20250814u + static_cast<std::uint64_t>(d));
            });
        for (const CorpusEntry& e : standard_corpus(cfg.brute_cap))
            add([e] { return verify_coeff_formulas_poset(e.name, e.poset); });
    }

    if (sel.order_basics)
        for (const CorpusEntry& e : standard_corpus(cfg.brute_cap))
            add([e, k = cfg.max_k] { return verify_order_polytope_basics(e.name, e.poset, k); });

    if (sel.fast_path) {
        const std::vector<std::pair<std::string, Poset>> parts = {
            {"chain:0", Poset()},        {"chain:1", make_chain(1)},
            {"chain:2", make_chain(2)},  {"antichain:2", make_antichain(2)},
            {"chain:3", make_chain(3)},  {"antichain:3", make_antichain(3)},
        };
        for (const auto& [pname, p] : parts)
            for (const auto& [rname, r] : parts) {
                int block = p.size() + r.size() + 1;
                for (int n = 1; n * block <= cfg.brute_cap; ++n) {
                    std::string label = "bicomb(" + pname + "," + rname + "):" + std::to_string(n);
                    add([label, lp = p, rp = r, n, k = cfg.max_k] {
                        return verify_fast_path_bicomb(label, lp, rp, n, k);
                    });
                }
            }
        for (int n = 1; n <= cfg.max_n; ++n)
            add([n, k = cfg.max_k] { return verify_squares_specialization(n, k); });
    }

    if (sel.interior)
        for (int n = 1; n <= cfg.max_n; ++n)
            add([n] { return verify_open_comb_first_kind(n); });

    if (sel.rgf) {
        if (cfg.n > 0 && cfg.k > 0) {
            add([n = cfg.n, k = cfg.k] { return verify_rgf_correspondence(n, k); });
        } else {
            const std::pair<int, int> cases[] = {{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}};
            for (auto [n, k] : cases)
                add([n, k] { return verify_rgf_correspondence(n, k); });
        }
    }

    if (sel.stirling) {
        if (cfg.k > 0 && cfg.r > 0) {
            add([k = cfg.k, r = cfg.r] { return verify_stirling_poset_hstar(k, r); });
        } else {
            const std::pair<int, int> cases[] = {{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
            for (auto [k, r] : cases)
                add([k, r] { return verify_stirling_poset_hstar(k, r); });
        }
    }

    if (sel.pyramid)
        for (const CorpusEntry& e : standard_corpus(std::max(cfg.brute_cap - 1, 1)))
            add([e] { return verify_pyramid_consistency(e.name, e.poset); });

    return jobs;
}

// ---- commands ----------------------------------------------------------

// Selected sequence or triangle, as exact decimal/rational strings. Scalar
// sequences hold one row; triangles hold one row per n.
struct NumberBlock {
    std::string name;
    int first_index = 0;
    bool triangle = false;
    std::vector<std::vector<std::string>> rows;
};

std::string join_row(const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i)
            s += ", ";
        s += row[i];
    }
    return s;
}

int run_numbers(const RunConfig& cfg, int bern, int harm, int eul, int s2, int s1, int faul) {
    int selected = (bern >= 0) + (harm >= 0) + (eul >= 0) + (s2 >= 0) + (s1 >= 0) + (faul >= 0);
    if (selected == 0) {
        std::cerr << "error: pick at least one of --bernoulli, --harmonic, --eulerian2, "
                     "--stirling2, --stirling1, --faulhaber\n";
        return 2;
    }
    std::vector<NumberBlock> blocks;
    auto bigint_rows = [](const std::vector<std::vector<BigInt>>& rows) {
        std::vector<std::vector<std::string>> out;
        out.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<std::string> r;
            r.reserve(row.size());
            for (const BigInt& v : row)
                r.push_back(v.str());
            out.push_back(std::move(r));
        }
        return out;
    };
    if (bern >= 0) {
        std::vector<std::string> row;
        for (int i = 0; i <= bern; ++i)
            row.push_back(bernoulli(i).str());
        blocks.push_back({"bernoulli", 0, false, {std::move(row)}});
    }
    if (harm >= 0) {
        std::vector<std::string> row;
        for (int i = 1; i <= harm; ++i)
            row.push_back(harmonic(i).str());
        blocks.push_back({"harmonic", 1, false, {std::move(row)}});
    }
    if (eul >= 0) {
        std::vector<std::vector<BigInt>> rows;
        for (int n = 1; n <= eul; ++n)
            rows.push_back(second_eulerian_row(n, cfg.enumeration_cap));
        blocks.push_back({"eulerian2", 1, true, bigint_rows(rows)});
    }
    if (s2 >= 0)
        blocks.push_back({"stirling2", 0, true,
                          bigint_rows(stirling_triangle(StirlingKind::second, s2).rows)});
    if (s1 >= 0)
        blocks.push_back({"stirling1", 0, true,
                          bigint_rows(stirling_triangle(StirlingKind::first_unsigned, s1).rows)});
    if (faul >= 0)
        blocks.push_back({"faulhaber", faul, false, {{faulhaber(faul).str()}}});

    switch (cfg.format) {
    case Format::json_lines: {
        json out = json::object();
        for (const NumberBlock& b : blocks)
            out[b.name] = b.triangle ? json(b.rows) : json(b.rows.front());
        std::cout << out.dump(2) << '\n';
        break;
    }
    case Format::csv:
        std::cout << "sequence,index,value\n";
        for (const NumberBlock& b : blocks)
            for (std::size_t i = 0; i < b.rows.size(); ++i) {
                if (b.triangle) {
                    std::cout << b.name << ',' << b.first_index + static_cast<int>(i) << ','
                              << csv_quote(join_row(b.rows[i])) << '\n';
                } else {
                    for (std::size_t j = 0; j < b.rows[i].size(); ++j)
                        std::cout << b.name << ',' << b.first_index + static_cast<int>(j) << ','
                                  << csv_quote(b.rows[i][j]) << '\n';
                }
            }
        break;
    case Format::text:
        for (const NumberBlock& b : blocks) {
            if (b.triangle) {
                if (blocks.size() > 1)
                    std::cout << b.name << ":\n";
                for (const auto& row : b.rows)
                    std::cout << join_row(row) << '\n';
            } else {
                if (blocks.size() > 1)
                    std::cout << b.name << ": ";
                std::cout << join_row(b.rows.front()) << '\n';
            }
        }
        break;
    }
    return 0;
}

int run_ehrhart(const RunConfig& cfg) {
    PosetSpec spec = parse_poset_spec(cfg.poset_spec);
    SpecEhrhart se = ehrhart_for_spec(spec, cfg.brute_cap);
    EhrhartData data = ehrhart_data_from_polynomial(se.ehr, se.dim);
    if (cfg.format == Format::json_lines) {
        std::cout << json(data).dump(2) << '\n';
        return 0;
    }
    Rational at_minus_one = data.ehrhart(Rational(-1));
    bool boundary_ok = data.dim == 0 || at_minus_one.is_zero();
    std::cout << "spec:         " << describe(spec) << '\n'
              << "elements:     " << data.dim << '\n'
              << "route:        " << se.route << '\n'
              << "ehrhart:      " << data.ehrhart.str() << '\n'
              << "hstar:        " << detail::vec_str(data.hstar.entries) << '\n'
              << "[x]Ehr(x):    " << linear_coeff(data.ehrhart).str() << '\n'
              << "[x]Ehr(x-1):  " << linear_coeff(shift(data.ehrhart, Rational(-1))).str() << '\n'
              << "Ehr(-1):      " << at_minus_one.str() << (boundary_ok ? " (ok)" : " (UNEXPECTED)")
              << '\n';
    return boundary_ok ? 0 : 1;
}

int run_verify(const RunConfig& cfg, const SuiteSelection& sel) {
    std::vector<Job> jobs = build_jobs(cfg, sel);
    std::vector<IdentityReport> reports = run_jobs(jobs, cfg.threads);
    render(reports, cfg.format, std::cout);
    for (const IdentityReport& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

int run_explore(const RunConfig& cfg) {
    std::vector<PyramidRow> rows = explore_pyramid(cfg.max_n);
    std::cout << "exploratory (no identity asserted): linear coefficients of pyramid-over-comb "
                 "Ehrhart polynomials\n";
    std::size_t w1 = std::string("[x]Ehr(x-1)").size();
    for (const PyramidRow& row : rows)
        w1 = std::max(w1, row.shifted_linear.str().size());
    std::cout << "n   [x]Ehr(x-1)" << std::string(w1 - 11 + 2, ' ') << "[x]Ehr(x)\n";
    for (const PyramidRow& row : rows) {
        std::string s = row.shifted_linear.str();
        std::cout << row.n << std::string(row.n < 10 ? 3 : 2, ' ') << s
                  << std::string(w1 - s.size() + 2, ' ') << row.plain_linear.str() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.threads = threads_from_env();

    CLI::App app{"exact Ehrhart polynomials, h*-vectors and identity checks for comb-like order polytopes"};
    app.require_subcommand(1);

    std::map<std::string, Format> format_names{
        {"text", Format::text}, {"json", Format::json_lines}, {"csv", Format::csv}};

    // numbers
    auto* numbers = app.add_subcommand("numbers", "print exact number sequences and triangles");
    int bern = -1, harm = -1, eul = -1, s2 = -1, s1 = -1, faul = -1;
    numbers->add_option("--bernoulli", bern, "Bernoulli numbers B_0..B_N (B_1 = +1/2)");
    numbers->add_option("--harmonic", harm, "harmonic numbers H_1..H_N");
    numbers->add_option("--eulerian2", eul, "second-order Eulerian triangle rows 1..N");
    numbers->add_option("--stirling2", s2, "Stirling set-partition triangle rows 0..N");
    numbers->add_option("--stirling1", s1, "unsigned Stirling cycle triangle rows 0..N");
    numbers->add_option("--faulhaber", faul, "power-sum polynomial 1^N + ... + x^N");
    numbers->add_option("--enum-cap", cfg.enumeration_cap,
                        "largest row computed by word enumeration instead of the recurrence")
        ->capture_default_str();
    numbers->add_option("--format", cfg.format,
                        "text | json | csv; csv columns are sequence,index,value")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    // ehrhart
    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and h*-vector of a poset spec");
    ehrhart->add_option("spec", cfg.poset_spec,
                        "chain:m | antichain:m | comb:n | comb(SPEC):n | bicomb(SPEC,SPEC):n | "
                        "pyr(SPEC) | stirling:k:r | file:PATH")
        ->required();
    ehrhart->add_option("--unsafe-cap", cfg.brute_cap,
                        "largest poset counted brute-force; raising this can be very slow")
        ->capture_default_str();
    ehrhart->add_option("--format", cfg.format, "text | json")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    // verify
    auto* verify = app.add_subcommand("verify", "run identity verification suites (all by default)");
    SuiteSelection sel;
    verify->add_flag("--bernoulli", sel.bernoulli, "descent-sum and harmonic-sum Bernoulli identities");
    verify->add_flag("--comb-counts", sel.comb_counts, "comb counts vs symmetric functions vs Stirling triangle");
    verify->add_flag("--comb-hstar", sel.comb_hstar, "three-way comb h* agreement");
    verify->add_flag("--comb-coeffs", sel.comb_coeffs, "comb linear coefficients vs Bernoulli forms");
    verify->add_flag("--general-comb", sel.general_comb, "power-sum coefficient route on general combs");
    verify->add_flag("--coeff-formulas", sel.coeff_formulas, "h*-based coefficient formulas");
    verify->add_flag("--order-basics", sel.order_basics, "order-polytope window and boundary facts");
    verify->add_flag("--fast-path", sel.fast_path, "bicomb fast path vs brute force, plus squares");
    verify->add_flag("--interior", sel.interior, "open-comb interior vs first-kind Stirling numbers");
    verify->add_flag("--rgf", sel.rgf, "uniform restricted-growth-function correspondence");
    verify->add_flag("--stirling-poset", sel.stirling, "r-Stirling poset h* vs word descents");
    verify->add_flag("--pyramid", sel.pyramid, "pyramid Ehrhart = discrete sum");
    bool all = false;
    verify->add_flag("--all", all, "run every suite");
    verify->add_option("--max-n", cfg.max_n, "upper bound for n-indexed suites")->capture_default_str();
    verify->add_option("--max-k", cfg.max_k, "upper bound for k windows")->capture_default_str();
    verify->add_option("--n", cfg.n, "specific n (with --rgf)");
    verify->add_option("--k", cfg.k, "specific k (with --rgf or --stirling-poset)");
    verify->add_option("--r", cfg.r, "specific r (with --stirling-poset)");
    verify->add_option("--enum-cap", cfg.enumeration_cap,
                       "largest n whose word set is enumerated rather than recurred")
        ->capture_default_str();
    verify->add_option("--unsafe-cap", cfg.brute_cap,
                       "largest poset counted brute-force; raising this can be very slow")
        ->capture_default_str();
    verify->add_option("--threads", cfg.threads,
                       "worker threads (default: EHRCOMB_THREADS or 1); output is identical "
                       "for any value")
        ->capture_default_str();
    verify->add_option("--format", cfg.format,
                       "text | json | csv; csv columns are name,params,lhs,rhs,lhs_path,"
                       "rhs_path,pass with RFC-4180 quoting")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    // explore
    auto* explore = app.add_subcommand("explore", "exploratory tables (nothing is asserted)");
    bool pyramid_table = false;
    explore->add_flag("--pyramid", pyramid_table, "linear coefficients of pyramid-over-comb polynomials");
    explore->add_option("--max-n", cfg.max_n, "number of rows")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*numbers)
            return run_numbers(cfg, bern, harm, eul, s2, s1, faul);
        if (*ehrhart)
            return run_ehrhart(cfg);
        if (*verify) {
            if (all || !sel.any())
                sel.select_all();
            return run_verify(cfg, sel);
        }
        if (*explore) {
            if (!pyramid_table) {
                std::cerr << "error: pick a table (--pyramid)\n";
                return 2;
            }
            return run_explore(cfg);
        }
    } catch (const ehrcomb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

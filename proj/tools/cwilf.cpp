// cwilf: exact tools for consecutive pattern avoidance in permutations.
//
// Subcommands cover the permutation statistics, minimal-overlap
// predicates, maximum packings, the brute-force generating-function
// tables, the recursion engines with their oracle checks, the brick
// tabloid involution, c-Wilf classification, the match-replacing
// bijection, and the full verification suite.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or malformed
// input, 3 enumeration budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "cwilf/acceptance.hpp"
#include "cwilf/equivalence.hpp"
#include "cwilf/overlap.hpp"
#include "cwilf/qseries.hpp"
#include "cwilf/recursions.hpp"
#include "cwilf/tabloids.hpp"

namespace {

using namespace cwilf;

struct CliState {
    RunConfig cfg;
    std::unique_ptr<Cache> cache;

    ParallelContext par() const { return cfg.parallel(); }
    // subcommand callbacks run inside App::parse, so the cache opens
    // lazily on first use, after the global flags have been read
    const Cache* cache_ptr() {
        if (!cache && !cfg.cache_dir.empty()) cache = std::make_unique<Cache>(cfg.cache_dir);
        return cache.get();
    }
};

void emit_series(std::ostream& os, const std::string& op, const nlohmann::json& params,
                 const QSeries& series, RunConfig::Format format) {
    switch (format) {
        case RunConfig::Format::Json: {
            nlohmann::json j = params;
            j["op"] = op;
            j["norm"] = norm_name(series.norm());
            j["order"] = series.order();
            auto arr = nlohmann::json::array();
            for (int n = 0; n <= series.order(); ++n) arr.push_back(series.at(n).to_json());
            j["coeffs"] = std::move(arr);
            os << j.dump() << "\n";
            return;
        }
        case RunConfig::Format::Csv: {
            os << "n,e_q,e_p,e_z,e_x,e_y,coeff\n";
            for (int n = 0; n <= series.order(); ++n) {
                const auto& terms = series.at(n).terms();
                for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
                    os << n;
                    for (int v = 0; v < kNumVars; ++v) os << ',' << it->first[static_cast<size_t>(v)];
                    os << ',' << it->second.str() << "\n";
                }
            }
            return;
        }
        case RunConfig::Format::Pretty: {
            for (int n = 0; n <= series.order(); ++n)
                os << op << "_" << n << " = " << series.at(n).pretty() << "\n";
            return;
        }
    }
}

int check_series_match(const QSeries& computed, const QSeries& oracle, const std::string& what) {
    for (int n = 0; n <= std::min(computed.order(), oracle.order()); ++n) {
        if (computed.at(n) != oracle.at(n)) {
            std::cerr << what << ": mismatch at n=" << n << "\n  computed: "
                      << computed.at(n).pretty() << "\n  oracle:   " << oracle.at(n).pretty()
                      << "\n";
            return 1;
        }
    }
    std::cerr << what << ": exact agreement through n="
              << std::min(computed.order(), oracle.order()) << "\n";
    return 0;
}

std::vector<Permutation> load_patterns(const std::string& arg) {
    std::vector<Permutation> out;
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::string line;
        while (std::getline(in, line)) {
            const auto a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            const auto b = line.find_last_not_of(" \t\r");
            out.push_back(Permutation::parse(line.substr(a, b - a + 1)));
        }
        if (out.empty()) throw invalid_input("pattern file '" + arg + "' holds no patterns");
        return out;
    }
    for (const auto& p : PatternBag::parse(arg).all_patterns()) out.push_back(p);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for consecutive pattern avoidance in permutations"};
    app.require_subcommand(1);

    CliState st;
    try {
        st.cfg = RunConfig::from_env();
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    app.add_option("--threads", st.cfg.threads, "worker threads (0 = all cores)");
    app.add_option("--budget", st.cfg.budget_n, "max enumeration length for brute-force tables")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", st.cfg.cache_dir, "cache directory for brute-force tables");
    std::map<std::string, RunConfig::Format> format_names{
        {"json", RunConfig::Format::Json},
        {"csv", RunConfig::Format::Csv},
        {"pretty", RunConfig::Format::Pretty}};
    app.add_option("--format", st.cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    int exit_code = 0;

    // ---- perm_core ----
    std::string word;
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a word of distinct integers");
    cmd_reduce->add_option("word", word, "digit string or space-separated integers")->required();
    cmd_reduce->callback([&] {
        std::cout << reduce(std::span<const int>(parse_word(word))).str() << "\n";
    });

    std::string stats_perm;
    auto* cmd_stats = app.add_subcommand("stats", "descents, inversions, left-to-right minima");
    cmd_stats->add_option("permutation", stats_perm)->required();
    cmd_stats->callback([&] {
        const Permutation sigma = Permutation::parse(stats_perm);
        const auto b = stats(sigma);
        if (st.cfg.format == RunConfig::Format::Pretty) {
            std::cout << "sigma  = " << sigma.str() << "\nn      = " << sigma.size()
                      << "\ndes    = " << b.des << "\ninv    = " << b.inv
                      << "\ncoinv  = " << b.coinv << "\nlrmin  = " << b.lrmin << "\n";
            return;
        }
        nlohmann::json j;
        j["permutation"] = sigma.str();
        j["n"] = sigma.size();
        j["des"] = b.des;
        j["inv"] = b.inv;
        j["coinv"] = b.coinv;
        j["lrmin"] = b.lrmin;
        j["des_set"] = b.des_set;
        std::cout << j.dump() << "\n";
    });

    std::string match_sigma, match_patterns;
    auto* cmd_match = app.add_subcommand("match", "consecutive matches and occurrence of a pattern set");
    cmd_match->add_option("sigma", match_sigma)->required();
    cmd_match->add_option("patterns", match_patterns, "comma-separated patterns of one length")
        ->required();
    cmd_match->callback([&] {
        const Permutation sigma = Permutation::parse(match_sigma);
        const PatternSet gamma = PatternSet::parse(match_patterns);
        const auto positions = match_positions(sigma, gamma);
        nlohmann::json j;
        j["sigma"] = sigma.str();
        j["patterns"] = gamma.str();
        j["positions"] = positions;
        j["count"] = positions.size();
        j["occurs"] = occurs(sigma, gamma);
        std::cout << j.dump() << "\n";
    });

    // ---- overlap ----
    std::string mo_tau;
    bool mo_definitional = false;
    auto* cmd_mo = app.add_subcommand("minoverlap", "minimal overlapping property of a pattern");
    cmd_mo->add_option("tau", mo_tau)->required();
    cmd_mo->add_flag("--definitional", mo_definitional, "force the exhaustive scan");
    cmd_mo->callback([&] {
        const Permutation tau = Permutation::parse(mo_tau);
        const OverlapReport r = mo_definitional
                                    ? is_minimal_overlapping_definitional(tau, st.par())
                                    : is_minimal_overlapping(tau, st.par());
        std::cout << r.to_json().dump() << "\n";
    });

    std::string mu_alpha, mu_beta;
    bool mu_definitional = false;
    auto* cmd_mu = app.add_subcommand("mutual", "mutual minimal overlap of two patterns");
    cmd_mu->add_option("alpha", mu_alpha)->required();
    cmd_mu->add_option("beta", mu_beta)->required();
    cmd_mu->add_flag("--definitional", mu_definitional, "force the exhaustive scan");
    cmd_mu->callback([&] {
        const Permutation a = Permutation::parse(mu_alpha), b = Permutation::parse(mu_beta);
        const OverlapReport r = mu_definitional
                                    ? are_mutually_minimal_overlapping_definitional(a, b, st.par())
                                    : are_mutually_minimal_overlapping(a, b, st.par());
        std::cout << r.to_json().dump() << "\n";
    });

    std::string pk_tau;
    int pk_n = 1;
    auto* cmd_pk = app.add_subcommand("packings", "maximum packings of a minimal overlapping pattern");
    cmd_pk->add_option("tau", pk_tau)->required();
    cmd_pk->add_option("--n", pk_n, "number of matches")->required()->check(CLI::PositiveNumber);
    cmd_pk->callback([&] {
        const PackingRow row = enumerate_max_packings(Permutation::parse(pk_tau), pk_n, st.par());
        if (st.cfg.format == RunConfig::Format::Pretty) {
            std::cout << "pattern " << row.tau.str() << ", " << row.matches << " matches, length "
                      << row.matches * (row.tau.size() - 1) + 1 << "\ncount = " << row.count.str()
                      << "\nmp(p,q) = " << row.poly.pretty() << "\n";
            for (const auto& p : row.packings) std::cout << p.str() << "\n";
            return;
        }
        std::cout << row.to_json().dump() << "\n";
    });

    // ---- qseries ----
    std::string series_pattern, series_set, series_check;
    int series_n = 6;
    bool md_p_one = false;

    auto add_series_options = [&](CLI::App* cmd, bool with_set) {
        cmd->add_option("--pattern", series_pattern, "single pattern");
        if (with_set) cmd->add_option("--set", series_set, "comma-separated pattern set");
        cmd->add_option("--n", series_n, "truncation order")->required()->check(CLI::PositiveNumber);
    };
    auto series_bag = [&]() -> PatternBag {
        if (!series_set.empty() && !series_pattern.empty())
            throw invalid_input("give either --pattern or --set, not both");
        if (!series_set.empty()) return PatternBag::parse(series_set);
        if (!series_pattern.empty()) return PatternBag(Permutation::parse(series_pattern));
        throw invalid_input("one of --pattern or --set is required");
    };

    auto* cmd_inm = app.add_subcommand("inm", "match-free z^{des+1} q^{inv} table");
    add_series_options(cmd_inm, true);
    cmd_inm->callback([&] {
        const PatternBag g = series_bag();
        const QSeries s = brute_inm(g, series_n, st.par(), st.cache_ptr(), st.cfg.budget_n);
        emit_series(std::cout, "INM", {{"set", g.str()}}, s, st.cfg.format);
    });

    auto* cmd_iu = app.add_subcommand("iu", "reciprocal of the INM series");
    add_series_options(cmd_iu, true);
    cmd_iu->add_option("--check", series_check, "compare against a recursion: thm-key or thm-set");
    cmd_iu->callback([&] {
        const PatternBag g = series_bag();
        const QSeries iu = brute_inm(g, series_n, st.par(), st.cache_ptr(), st.cfg.budget_n).reciprocal();
        emit_series(std::cout, "IU", {{"set", g.str()}}, iu, st.cfg.format);
        if (series_check.empty()) return;
        QSeries rec(Norm::QFactorial, 0);
        if (series_check == "thm-key") {
            const auto pats = g.all_patterns();
            if (pats.size() != 1) throw invalid_input("--check thm-key needs a single pattern");
            rec = iu_thm_key(pats.front(), series_n, st.par());
        } else if (series_check == "thm-set") {
            rec = iu_thm_set(PatternSet(g.all_patterns()), series_n, st.par());
        } else {
            throw invalid_input("--check must be thm-key or thm-set");
        }
        exit_code = check_series_match(rec, iu, "iu --check " + series_check);
    });

    auto* cmd_nmxy = app.add_subcommand("nmxy", "match-free x^{LRmin} y^{1+des} table");
    add_series_options(cmd_nmxy, true);
    cmd_nmxy->callback([&] {
        const PatternBag g = series_bag();
        const QSeries s = brute_nm_xy(g, series_n, st.par(), st.cache_ptr(), st.cfg.budget_n);
        emit_series(std::cout, "NM", {{"set", g.str()}}, s, st.cfg.format);
    });

    auto* cmd_md = app.add_subcommand("matchdist", "x^{mch} p^{coinv} q^{inv} over all permutations");
    add_series_options(cmd_md, false);
    cmd_md->add_flag("--p-one", md_p_one, "drop the coinversion statistic (p = 1)");
    cmd_md->callback([&] {
        if (series_pattern.empty()) throw invalid_input("--pattern is required");
        const Permutation tau = Permutation::parse(series_pattern);
        const QSeries s =
            match_distribution(tau, series_n, st.par(), md_p_one, st.cache_ptr(), st.cfg.budget_n);
        emit_series(std::cout, "MD", {{"pattern", tau.str()}, {"p", md_p_one ? "1" : "p"}}, s,
                    st.cfg.format);
    });

    // ---- recursions ----
    std::string recur_family, recur_pattern, recur_set;
    int recur_n = 9, recur_p = 0, recur_k1 = 0, recur_k2 = 0, recur_s = 0;
    bool recur_check = false;
    auto* cmd_recur = app.add_subcommand("recur", "closed-form recursion engines");
    cmd_recur->add_option("--family", recur_family,
                          "thm-key | thm-set | jr-1324 | jr-1324p | br-1324-123 | br-1324p-12p | "
                          "br-gamma-k1k2 | br-gamma22s | closed-1324-123 | closed-gamma222")
        ->required();
    cmd_recur->add_option("--pattern", recur_pattern);
    cmd_recur->add_option("--set", recur_set);
    cmd_recur->add_option("--n", recur_n)->check(CLI::PositiveNumber);
    cmd_recur->add_option("--p", recur_p);
    cmd_recur->add_option("--k1", recur_k1);
    cmd_recur->add_option("--k2", recur_k2);
    cmd_recur->add_option("--s", recur_s);
    cmd_recur->add_flag("--check-oracle", recur_check, "compare against the brute-force oracle");
    cmd_recur->callback([&] {
        if (recur_family == "thm-key") {
            if (recur_pattern.empty()) throw invalid_input("thm-key needs --pattern");
            const Permutation tau = Permutation::parse(recur_pattern);
            const QSeries iu = iu_thm_key(tau, recur_n, st.par());
            emit_series(std::cout, "IU", {{"family", recur_family}, {"pattern", tau.str()}}, iu,
                        st.cfg.format);
            if (recur_check)
                exit_code = check_series_match(
                    iu,
                    brute_inm(PatternBag(tau), recur_n, st.par(), st.cache_ptr(), st.cfg.budget_n)
                        .reciprocal(),
                    "thm-key vs reciprocal oracle");
            return;
        }
        if (recur_family == "thm-set") {
            if (recur_set.empty()) throw invalid_input("thm-set needs --set");
            const PatternSet gamma = PatternSet::parse(recur_set);
            const QSeries iu = iu_thm_set(gamma, recur_n, st.par());
            emit_series(std::cout, "IU", {{"family", recur_family}, {"set", gamma.str()}}, iu,
                        st.cfg.format);
            if (recur_check)
                exit_code = check_series_match(
                    iu,
                    brute_inm(PatternBag(gamma), recur_n, st.par(), st.cache_ptr(), st.cfg.budget_n)
                        .reciprocal(),
                    "thm-set vs reciprocal oracle");
            return;
        }
        if (auto closed = u_closed_from_name(recur_family)) {
            QSeries s(Norm::PlainFactorial, recur_n);
            for (int n = 0; n <= recur_n; ++n) s.at(n) = u_closed(*closed, n);
            emit_series(std::cout, "U", {{"family", recur_family}}, s, st.cfg.format);
            if (recur_check) {
                RecursionSpec spec;
                if (*closed == UClosed::Closed1324_123) {
                    spec.family = UFamily::Br1324_123;
                } else {
                    spec.family = UFamily::BrGamma22s;
                    spec.s = 2;
                }
                exit_code = check_series_match(s, u_quoted(spec, recur_n),
                                               recur_family + std::string(" vs its recursion"));
            }
            return;
        }
        const auto family = u_family_from_name(recur_family);
        if (!family) throw invalid_input("unknown recursion family '" + recur_family + "'");
        RecursionSpec spec;
        spec.family = *family;
        spec.p = recur_p;
        spec.k1 = recur_k1;
        spec.k2 = recur_k2;
        spec.s = recur_s;
        const QSeries u = u_quoted(spec, recur_n);
        emit_series(std::cout, "U", {{"family", recur_family}, {"set", spec.pattern_set().str()}},
                    u, st.cfg.format);
        if (recur_check)
            exit_code = check_series_match(
                u, brute_u(spec.pattern_set(), recur_n, st.par(), st.cache_ptr(), st.cfg.budget_n),
                recur_family + std::string(" vs brute oracle"));
    });

    // ---- tabloids ----
    std::string tab_set;
    int tab_n = 4;
    bool tab_fixed_only = false, tab_verify = false, tab_list = false;
    auto* cmd_tab = app.add_subcommand("tabloids", "filled labeled brick tabloids and the involution");
    cmd_tab->add_option("--set", tab_set)->required();
    cmd_tab->add_option("--n", tab_n)->required()->check(CLI::PositiveNumber);
    cmd_tab->add_flag("--fixed-only", tab_fixed_only,
                      "list the involution fixed points (implies --list)");
    cmd_tab->add_flag("--list", tab_list, "include the objects themselves in the output");
    cmd_tab->add_flag("--verify", tab_verify,
                      "check involution, orbit and fixed-point-sum properties");
    cmd_tab->callback([&] {
        if (tab_fixed_only) tab_list = true;
        const PatternBag gamma = PatternBag::parse(tab_set);
        long long objects = 0, fixed = 0;
        MultiPoly osum, fsum;
        auto list = nlohmann::json::array();
        bool involution_ok = true, orbit_ok = true;
        for_each_object(gamma, tab_n, [&](const FilledTabloid& o) {
            ++objects;
            osum += o.signed_weight();
            const bool is_fixed = is_fixed_point(gamma, o);
            if (is_fixed) {
                ++fixed;
                fsum += o.signed_weight();
            }
            if (tab_list && (!tab_fixed_only || is_fixed)) list.push_back(o.to_json());
            if (tab_verify) {
                const FilledTabloid image = involution_j(gamma, o);
                if (!(involution_j(gamma, image) == o)) involution_ok = false;
                if (!(image == o) &&
                    (image.sign() != -o.sign() || !(image.weight() == o.weight())))
                    orbit_ok = false;
            }
        });
        nlohmann::json j;
        j["set"] = gamma.str();
        j["n"] = tab_n;
        j["objects"] = objects;
        j["fixed_points"] = fixed;
        j["signed_sum"] = osum.to_json();
        j["fixed_point_sum"] = fsum.to_json();
        if (tab_list) j[tab_fixed_only ? "fixed" : "all"] = std::move(list);
        if (tab_verify) {
            const QSeries iu =
                brute_inm(gamma, tab_n, st.par(), st.cache_ptr(), st.cfg.budget_n).reciprocal();
            const bool sums_ok = osum == fsum && fsum == iu.at(tab_n);
            j["verify"] = {{"involution", involution_ok},
                           {"sign_reversing_weight_preserving", orbit_ok},
                           {"sums_match_iu", sums_ok}};
            if (!involution_ok || !orbit_ok || !sums_ok) exit_code = 1;
        }
        std::cout << j.dump() << "\n";
    });

    // ---- equivalence ----
    std::string cls_patterns, cls_stats = "des", cls_out;
    int cls_n = 6;
    auto* cmd_cls = app.add_subcommand("classify", "stat-refined c-Wilf classification at desk scale");
    cmd_cls->add_option("--patterns", cls_patterns, "comma-separated list or a file of patterns")
        ->required();
    cmd_cls->add_option("--stats", cls_stats, "subset of des,inv,lrmin");
    cmd_cls->add_option("--n", cls_n)->check(CLI::PositiveNumber);
    cmd_cls->add_option("--out", cls_out, "write the JSON report to a file");
    cmd_cls->callback([&] {
        const auto report = classify(load_patterns(cls_patterns), StatProfile::parse(cls_stats),
                                     cls_n, st.par(), st.cache_ptr(), st.cfg.budget_n);
        const std::string body = report.to_json().dump();
        if (!cls_out.empty()) {
            std::ofstream out(cls_out, std::ios::trunc);
            out << body << "\n";
            std::cout << "wrote " << cls_out << " (" << report.classes.size() << " classes)\n";
        } else {
            std::cout << body << "\n";
        }
    });

    std::string phi_alpha, phi_beta, phi_sigma;
    auto* cmd_phi = app.add_subcommand("phi", "apply the match-replacing bijection");
    cmd_phi->add_option("--alpha", phi_alpha)->required();
    cmd_phi->add_option("--beta", phi_beta)->required();
    cmd_phi->add_option("--sigma", phi_sigma)->required();
    cmd_phi->callback([&] {
        std::cout << phi(Permutation::parse(phi_alpha), Permutation::parse(phi_beta),
                         Permutation::parse(phi_sigma), st.par())
                         .str()
                  << "\n";
    });

    std::string fam_kind, fam_variant;
    int fam_blocks = 1;
    auto* cmd_fam = app.add_subcommand("family", "block constructions with 2^blocks equivalent variants");
    cmd_fam->add_option("kind", fam_kind, "t or s")->required();
    cmd_fam->add_option("--blocks", fam_blocks)->required()->check(CLI::PositiveNumber);
    cmd_fam->add_option("--variant", fam_variant, "one digit (1 or 2) per block")->required();
    cmd_fam->callback([&] {
        if (fam_kind.size() != 1) throw invalid_input("kind must be t or s");
        std::vector<int> variant;
        for (char c : fam_variant) {
            if (c < '0' || c > '9') throw invalid_input("variant must be digits");
            variant.push_back(c - '0');
        }
        std::cout << family_pattern(fam_kind[0], fam_blocks, variant).str() << "\n";
    });

    // ---- verification ----
    auto* cmd_verify = app.add_subcommand("verify-all", "run the full verification suite");
    cmd_verify->callback([&] {
        const auto results = run_acceptance(st.cfg);
        const int failures = print_acceptance_report(std::cout, results);
        if (failures > 0) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

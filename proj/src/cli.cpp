#include "reldom/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "reldom/cache.hpp"
#include "reldom/cover.hpp"
#include "reldom/exprs.hpp"
#include "reldom/jsonout.hpp"
#include "reldom/reproduce.hpp"

namespace reldom {

namespace {

struct CliOptions {
    std::string command;
    std::string alg_path;
    std::string module_expr;
    std::string wrt_expr;
    bool co = false;
    int d = 1;
    std::vector<std::string> pool;
    std::vector<std::string> testset;
    std::string field_override;
    int cap = 64;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string cache_dir;
    std::vector<std::string> mod_files;
    std::string fixtures_dir;
};

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

template <class F>
struct Workspace {
    F field;
    CliOptions opt;
    AlgPtr<F> alg;
    std::map<std::string, ModPtr<F>> named;
    BoundQuiverPresentation pres;

    void load() {
        pres = parse_algebra_file(read_text_file(opt.alg_path), file_stem(opt.alg_path));
        alg = build_bound_quiver_algebra(field, pres);
        if (!opt.cache_dir.empty()) {
            load_resolution_cache(opt.cache_dir, alg);
            load_resolution_cache(opt.cache_dir, opposite_algebra(alg));
        }
        auto mods = opt.mod_files;
        auto sibling = std::filesystem::path(opt.alg_path).replace_extension(".mod");
        if (std::filesystem::exists(sibling)) mods.push_back(sibling.string());
        for (const auto& mf : mods) {
            for (const auto& pm : parse_module_file(read_text_file(mf))) {
                auto m = module_from_parsed(alg, pm);
                if (!module_satisfies_relations(m, pres))
                    throw input_error("module '" + pm.name + "' in " + mf +
                                      " violates the algebra relations");
                named[pm.name] = m;
            }
        }
    }

    void persist() {
        if (opt.cache_dir.empty()) return;
        persist_resolution_cache(opt.cache_dir, alg);
        persist_resolution_cache(opt.cache_dir, opposite_algebra(alg));
    }

    ModPtr<F> module(const std::string& expr) { return eval_module_expr(alg, expr, named); }

    Json header(const std::string& command) const {
        Json j;
        j["schema"] = 1;
        j["command"] = command;
        j["field"] = field.name();
        j["cap"] = opt.cap;
        j["seed"] = opt.seed;
        Json aj;
        aj["name"] = alg->name;
        aj["dimension"] = alg->dim;
        aj["vertices"] = alg->vertex_labels;
        j["algebra"] = aj;
        return j;
    }
};

void emit(const CliOptions& opt, std::ostream& out, const Json& j,
          const std::string& text_form) {
    if (opt.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text_form;
}

// exit 3 whenever a reported headline value is only a bound
bool any_bound(std::initializer_list<DimValue> vs) {
    for (const auto& v : vs)
        if (v.is_bound()) return true;
    return false;
}

template <class F>
int cmd_analyze(Workspace<F>& s, std::ostream& out) {
    auto h = homological_dims(s.alg, s.opt.cap);
    Json j = s.header("analyze");
    Json r;
    Json simples = Json::array();
    for (int v = 0; v < s.alg->nvert(); ++v) {
        Json sj;
        sj["vertex"] = s.alg->vertex_labels[v];
        sj["pd"] = dim_json(h.pd_simple[v]);
        sj["id"] = dim_json(h.id_simple[v]);
        simples.push_back(sj);
    }
    r["simples"] = simples;
    r["gldim"] = dim_json(h.gldim);
    r["id_A"] = dim_json(h.id_regular);
    r["pd_DA"] = dim_json(h.pd_coregular);
    r["gorenstein"] = h.gorenstein;
    if (h.gorenstein_parameter) r["gorenstein_parameter"] = *h.gorenstein_parameter;
    j["report"] = r;
    std::ostringstream text;
    text << "algebra " << s.alg->name << ": dimension " << s.alg->dim << "\n";
    for (int v = 0; v < s.alg->nvert(); ++v)
        text << "  S(" << s.alg->vertex_labels[v] << "): pd " << h.pd_simple[v].str() << ", id "
             << h.id_simple[v].str() << "\n";
    text << "  gldim " << h.gldim.str() << ", id(A) " << h.id_regular.str() << ", pd(DA) "
         << h.pd_coregular.str() << "\n";
    text << "  Gorenstein: " << (h.gorenstein ? "yes" : "no");
    if (h.gorenstein_parameter) text << " (parameter " << *h.gorenstein_parameter << ")";
    text << "\n";
    emit(s.opt, out, j, text.str());
    DimValue worst = dim_max(dim_max(h.gldim, h.id_regular), h.pd_coregular);
    return worst.is_bound() ? 3 : 0;
}

template <class F>
int cmd_domdim(Workspace<F>& s, std::ostream& out) {
    if (s.opt.module_expr.empty() || s.opt.wrt_expr.empty())
        throw input_error("domdim needs --module and --wrt");
    auto m = s.module(s.opt.module_expr);
    auto q = s.module(s.opt.wrt_expr);
    auto seq = s.opt.co ? relative_codominant_dimension(m, q, s.opt.cap, s.opt.seed)
                        : relative_dominant_dimension(m, q, s.opt.cap, s.opt.seed);
    Json j = s.header("domdim");
    Json r;
    r["module"] = module_brief<F>(m);
    r["wrt"] = module_brief<F>(q);
    r["relative_" + std::string(s.opt.co ? "codominant" : "dominant") + "_dimension"] =
        dim_json(seq.value);
    r["witness"] = approx_json(seq);
    j["report"] = r;
    std::ostringstream text;
    text << "relative " << (s.opt.co ? "codominant" : "dominant") << " dimension of "
         << s.opt.module_expr << " with respect to " << s.opt.wrt_expr << " = " << seq.value.str()
         << "\n";
    emit(s.opt, out, j, text.str());
    return seq.value.is_bound() ? 3 : 0;
}

template <class F>
int cmd_pair(Workspace<F>& s, std::ostream& out) {
    if (s.opt.wrt_expr.empty()) throw input_error("pair needs --wrt");
    auto q = s.module(s.opt.wrt_expr);
    auto r = classify_pair(s.alg, q, s.opt.cap, s.opt.seed);
    Json j = s.header("pair");
    j["report"] = pair_json(r);
    std::ostringstream text;
    text << "pair (" << s.alg->name << ", " << s.opt.wrt_expr << "):\n";
    text << "  pd(Q) " << r.pd_q.str() << ", id(Q) " << r.id_q.str() << ", self-orthogonal "
         << verdict_str(r.q_self_orthogonal) << "\n";
    text << "  faithful dimension " << r.faithful.str() << ", id(A) " << r.id_regular.str()
         << ", pd(DA) " << r.pd_coregular.str() << ", gldim " << r.gldim.str() << "\n";
    text << "  " << j["report"]["classification"].template get<std::string>();
    if (r.n_lo) text << " for n in [" << *r.n_lo << ", " << r.n_hi.str() << "]";
    text << "\n";
    emit(s.opt, out, j, text.str());
    return r.cls == PairReport<F>::Cls::Inconclusive ? 3 : 0;
}

template <class F>
int cmd_tilt(Workspace<F>& s, std::ostream& out) {
    if (s.opt.wrt_expr.empty()) throw input_error("tilt needs --wrt");
    auto q = s.module(s.opt.wrt_expr);
    auto tilt = construct_canonical_tilt(s.alg, q, s.opt.d, s.opt.cap, s.opt.seed);
    Json j = s.header("tilt");
    Json r;
    r["d"] = s.opt.d;
    r["module"] = module_brief<F>(tilt.module);
    r["summands"] = summand_list<F>(tilt.module, s.opt.seed);
    r["cosyzygy"] = module_brief<F>(tilt.cosyzygy);
    r["domdim_wrt_Q"] = dim_json(tilt.domdim);
    r["codomdim_wrt_Q"] = dim_json(tilt.codomdim);
    r["tilting"] = tilting_json(tilt.report);
    r["witness"] = approx_json(tilt.witness);
    j["report"] = r;
    std::ostringstream text;
    text << "canonical tilting-cotilting module for d = " << s.opt.d << ":\n";
    text << "  dimension " << tilt.module->total_dim() << ", summands:";
    for (const auto& fac : decompose(tilt.module, s.opt.seed).factors) {
        text << " [";
        for (size_t i = 0; i < fac.module->dims().size(); ++i)
            text << (i ? "," : "") << fac.module->dims()[i];
        text << "]x" << fac.multiplicity;
    }
    text << "\n  Q-domdim " << tilt.domdim.str() << ", Q-codomdim " << tilt.codomdim.str() << "\n";
    text << "  tilting " << verdict_str(tilt.report.tilting) << " (pd " << tilt.report.pd.str()
         << "), cotilting " << verdict_str(tilt.report.cotilting) << " (id "
         << tilt.report.id.str() << ")\n";
    emit(s.opt, out, j, text.str());
    bool certified = tilt.report.tilting == Verdict::Yes && tilt.report.cotilting == Verdict::Yes;
    bool und = tilt.report.tilting == Verdict::Undetermined ||
               tilt.report.cotilting == Verdict::Undetermined;
    return certified ? 0 : (und ? 3 : 1);
}

template <class F>
int cmd_unique(Workspace<F>& s, std::ostream& out) {
    if (s.opt.wrt_expr.empty()) throw input_error("unique needs --wrt");
    auto q = s.module(s.opt.wrt_expr);
    std::vector<ModPtr<F>> pool;
    if (s.opt.pool.empty()) {
        pool = default_pool(s.alg, q, s.opt.d, s.opt.cap, s.opt.seed);
    } else {
        for (const auto& e : s.opt.pool) pool.push_back(s.module(e));
    }
    auto res = uniqueness_search(s.alg, q, s.opt.d, pool, SearchMode::TiltingCotilting, s.opt.cap,
                                 s.opt.seed);
    Json j = s.header("unique");
    Json r;
    r["d"] = s.opt.d;
    Json pj = Json::array();
    for (const auto& p : pool) pj.push_back(module_brief<F>(p));
    r["pool"] = pj;
    Json qj = Json::array();
    for (size_t qi = 0; qi < res.qualifiers.size(); ++qi) {
        Json one;
        one["members"] = res.qualifiers[qi];
        one["module"] = module_brief<F>(res.modules[qi]);
        qj.push_back(one);
    }
    r["qualifiers"] = qj;
    r["unique"] = res.unique;
    j["report"] = r;
    std::ostringstream text;
    text << "pool of " << pool.size() << " indecomposables; " << res.qualifiers.size()
         << " qualifying d-tilting-cotilting module(s)\n";
    for (const auto& idx : res.qualifiers) {
        text << "  qualifier:";
        for (int i : idx) text << " " << pool[i]->name();
        text << "\n";
    }
    text << (res.unique ? "  uniqueness: certified\n" : "  uniqueness: not unique\n");
    emit(s.opt, out, j, text.str());
    return 0;
}

template <class F>
int cmd_cover(Workspace<F>& s, std::ostream& out) {
    if (s.opt.wrt_expr.empty()) throw input_error("cover needs --wrt");
    auto q = s.module(s.opt.wrt_expr);
    std::vector<ModPtr<F>> testset;
    if (s.opt.testset.empty()) {
        for (int v = 0; v < s.alg->nvert(); ++v) {
            testset.push_back(standard_simple(s.alg, v));
            testset.push_back(standard_projective(s.alg, v));
            testset.push_back(standard_injective(s.alg, v));
        }
    } else {
        for (const auto& e : s.opt.testset) testset.push_back(s.module(e));
    }
    auto rep = cover_ext_comparison(s.alg, q, s.opt.d, testset, s.opt.cap, s.opt.seed);
    Json j = s.header("cover");
    Json r;
    r["d"] = s.opt.d;
    r["vacuous_range"] = rep.vacuous;
    if (!rep.vacuous) {
        r["pair_certified"] = rep.pair_certified;
        r["skipped"] = rep.skipped;
        Json lines = Json::array();
        for (const auto& line : rep.lines) {
            Json lj;
            lj["M"] = line.m;
            lj["N"] = line.n;
            Json dims = Json::array();
            for (auto& [a, b] : line.dims) dims.push_back({{"ext_A", a}, {"ext_B", b}});
            lj["degrees"] = dims;
            lj["canonical_hom_bijective"] = line.canonical_bijective;
            lj["pass"] = line.pass;
            lines.push_back(lj);
        }
        r["comparisons"] = lines;
        Json tor = Json::array();
        for (auto& [name, ok] : rep.tor_side) tor.push_back({{"module", name}, {"tor_vanishes", ok}});
        r["tor_side"] = tor;
        r["all_pass"] = rep.all_pass;
    }
    j["report"] = r;
    std::ostringstream text;
    if (rep.vacuous) {
        text << "degree range 0.." << s.opt.d - 2 << " is empty: vacuous-range report\n";
    } else {
        text << "cover comparison at d = " << s.opt.d << ": pair "
             << (rep.pair_certified ? "certified" : "not certified") << ", " << rep.lines.size()
             << " ordered pairs, " << rep.skipped.size() << " skipped, "
             << (rep.all_pass ? "all pass" : "FAILURES") << "\n";
    }
    emit(s.opt, out, j, text.str());
    if (rep.vacuous) return 0;
    return rep.all_pass ? 0 : 1;
}

template <class F>
int run_typed(const F& field, const CliOptions& opt, std::ostream& out) {
    Workspace<F> s{field, opt};
    s.load();
    int rc = 2;
    if (opt.command == "analyze")
        rc = cmd_analyze(s, out);
    else if (opt.command == "domdim")
        rc = cmd_domdim(s, out);
    else if (opt.command == "pair")
        rc = cmd_pair(s, out);
    else if (opt.command == "tilt")
        rc = cmd_tilt(s, out);
    else if (opt.command == "unique")
        rc = cmd_unique(s, out);
    else if (opt.command == "cover")
        rc = cmd_cover(s, out);
    s.persist();
    return rc;
}

template <class F>
int run_reproduce_typed(const F& field, const CliOptions& opt, std::ostream& out) {
    FixtureSource src = opt.fixtures_dir.empty() ? FixtureSource::embedded()
                                                 : FixtureSource::from_dir(opt.fixtures_dir);
    auto checks = run_reproduction(field, src, opt.cap, opt.seed);
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    if (opt.format == "json") {
        Json j;
        j["schema"] = 1;
        j["command"] = "reproduce";
        j["field"] = field.name();
        j["cap"] = opt.cap;
        j["seed"] = opt.seed;
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json cj;
            cj["criterion"] = c.criterion;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["passed"] = static_cast<int>(checks.size()) - failed;
        j["total"] = static_cast<int>(checks.size());
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) out << format_check_line(c) << "\n";
        out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

std::pair<bool, FieldGF> parse_field_override(const std::string& spec) {
    if (spec == "QQ") return {false, FieldGF()};
    if (spec.rfind("GF:", 0) == 0)
        return {true, FieldGF(std::stoull(spec.substr(3)))};
    throw input_error("bad --field value (expected QQ or GF:p): " + spec);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions opt;
    CLI::App app{"exact computations of relative dominant dimensions, tilting-cotilting "
                 "modules, and relative Auslander-Gorenstein pairs for bound quiver algebras",
                 "reldom"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_alg) {
        if (with_alg) cmd->add_option("alg", opt.alg_path, "algebra file (.alg)")->required();
        cmd->add_option("--field", opt.field_override, "field override: QQ or GF:p");
        cmd->add_option("--cap", opt.cap, "iteration cap for open-ended computations");
        cmd->add_option("--seed", opt.seed, "seed for the decomposition sampler");
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cache-dir", opt.cache_dir, "persistent resolution cache directory");
        cmd->add_option("--mod", opt.mod_files, "module file(s) to load (.mod)");
    };

    auto* analyze = app.add_subcommand("analyze", "homological dimensions of the algebra");
    add_common(analyze, true);
    auto* domdim = app.add_subcommand("domdim", "relative (co)dominant dimension");
    add_common(domdim, true);
    domdim->add_option("--module", opt.module_expr, "module expression")->required();
    domdim->add_option("--wrt", opt.wrt_expr, "the module Q")->required();
    domdim->add_flag("--co", opt.co, "compute the codominant dimension");
    auto* pair = app.add_subcommand("pair", "relative Auslander-Gorenstein pair classification");
    add_common(pair, true);
    pair->add_option("--wrt", opt.wrt_expr, "the module Q")->required();
    auto* tilt = app.add_subcommand("tilt", "canonical tilting-cotilting module");
    add_common(tilt, true);
    tilt->add_option("--wrt", opt.wrt_expr, "the module Q")->required();
    tilt->add_option("--d", opt.d, "the parameter d")->required();
    auto* unique = app.add_subcommand("unique", "uniqueness search over a candidate pool");
    add_common(unique, true);
    unique->add_option("--wrt", opt.wrt_expr, "the module Q")->required();
    unique->add_option("--d", opt.d, "the parameter d")->required();
    unique->add_option("--pool", opt.pool, "pool member expressions (default: standard pool)");
    auto* cover = app.add_subcommand("cover", "Ext comparison across the Schur functor");
    add_common(cover, true);
    cover->add_option("--wrt", opt.wrt_expr, "the module Q")->required();
    cover->add_option("--d", opt.d, "the parameter d")->required();
    cover->add_option("--testset", opt.testset, "testset expressions");
    auto* reproduce = app.add_subcommand("reproduce", "run the bundled worked-example suite");
    add_common(reproduce, false);
    reproduce->add_option("--fixtures", opt.fixtures_dir,
                          "fixture directory (default: bundled copies)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        if (opt.command == "reproduce") {
            if (!opt.field_override.empty()) {
                auto [gf, f] = parse_field_override(opt.field_override);
                return gf ? run_reproduce_typed(f, opt, out)
                          : run_reproduce_typed(FieldQQ{}, opt, out);
            }
            return run_reproduce_typed(FieldQQ{}, opt, out);
        }
        // field: the file's declaration unless overridden
        std::string spec = opt.field_override;
        if (spec.empty()) {
            auto pres = parse_algebra_file(read_text_file(opt.alg_path), "probe");
            spec = pres.field_spec;
        }
        auto [gf, f] = parse_field_override(spec);
        return gf ? run_typed(f, opt, out) : run_typed(FieldQQ{}, opt, out);
    } catch (const undetermined_error& e) {
        err << "undetermined: " << e.what() << "\n";
        return 3;
    } catch (const presentation_error& e) {
        err << "presentation error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const saturation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const decompose_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace reldom

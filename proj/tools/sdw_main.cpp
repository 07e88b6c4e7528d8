// Command-line front door: catalog, entropy tables, irreducibility probes,
// surjectivity/pre-injectivity decisions, homoclinicity experiments,
// periodic points, surjunctivity, and the Garden-of-Eden suite.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "sdw/catalog.hpp"
#include "sdw/entropy.hpp"
#include "sdw/goe.hpp"
#include "sdw/homoclinic.hpp"
#include "sdw/report.hpp"

namespace {

using namespace sdw;

Budget budget_from_env() {
    Budget b;
    const char* profile = std::getenv("SDW_BUDGET_PROFILE");
    if (!profile) return b;
    std::string p = profile;
    if (p == "small") {
        b.max_patterns = std::size_t(1) << 16;
        b.max_nodes = std::size_t(1) << 20;
    } else if (p == "large") {
        b.max_patterns = std::size_t(1) << 26;
        b.max_nodes = std::size_t(1) << 30;
    }
    return b;
}

// "file:x.json" -> ingested SFT, "sofic:x.json" -> ingested presentation,
// anything else -> catalog id
SubshiftHandle resolve_system(const std::string& spec, Json& inputs) {
    inputs["system"] = spec;
    if (spec.rfind("file:", 0) == 0) {
        std::vector<std::string> warnings;
        auto h = ingest_sft(spec.substr(5), &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        return h;
    }
    if (spec.rfind("sofic:", 0) == 0) return ingest_sofic(spec.substr(6));
    return catalog_system(spec);
}

LocalRule resolve_rule(const std::string& spec, const SubshiftHandle& source,
                       Json& inputs) {
    inputs["rule"] = spec;
    if (spec.rfind("file:", 0) == 0) return ingest_rule(spec.substr(5));
    return catalog_rule(spec, source.alphabet(), source.dimension());
}

// "0,1" in d=1; "0,0;1,0" in d=2
Shape parse_shape(const std::string& text, int dimension) {
    std::vector<Point> pts;
    std::string cur;
    std::vector<int> coords;
    auto flush_coord = [&]() {
        if (!cur.empty()) {
            coords.push_back(std::stoi(cur));
            cur.clear();
        }
    };
    auto flush_point = [&]() {
        flush_coord();
        if (!coords.empty()) {
            if (static_cast<int>(coords.size()) != dimension)
                throw std::invalid_argument("shape coordinate rank mismatch");
            pts.push_back(Point(coords));
            coords.clear();
        }
    };
    for (char c : text) {
        if (c == ',') {
            if (dimension == 1) flush_point();
            else flush_coord();
        } else if (c == ';') {
            flush_point();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush_point();
    if (pts.empty()) throw std::invalid_argument("empty shape");
    return Shape(pts);
}

std::vector<int> parse_periods(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    if (out.empty()) throw std::invalid_argument("empty period list");
    return out;
}

DescribedConfig parse_base(const std::string& spec, const SubshiftHandle& s) {
    if (spec.rfind("uniform:", 0) == 0)
        return DescribedConfig::uniform(s.alphabet(), s.dimension(),
                                        s.alphabet().index_of(spec.substr(8)));
    if (spec.rfind("word:", 0) == 0) {
        if (s.dimension() != 1)
            throw std::invalid_argument("word backgrounds need dimension 1");
        std::vector<Symbol> syms;
        for (char c : spec.substr(5)) syms.push_back(s.alphabet().index_of(std::string(1, c)));
        return DescribedConfig::periodic_word(s.alphabet(), syms);
    }
    throw std::invalid_argument("base must be uniform:<symbol> or word:<symbols>");
}

int emit(const std::string& experiment, const Json& inputs, const Json& outputs,
         double wall_ms, const std::string& out_path) {
    ExperimentReport rep = make_report(experiment, inputs, outputs, wall_ms);
    std::string text = to_json(rep).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
    return 0;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic dynamics workbench"};
    app.require_subcommand(1);
        Budget budget = budget_from_env();

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");

    // catalog ------------------------------------------------------------
    auto* cat = app.add_subcommand("catalog", "list, show, or verify catalog entries");
    cat->fallthrough();
    std::string cat_action = "list", cat_id;
    cat->add_option("action", cat_action, "list | show | verify");
    cat->add_option("id", cat_id, "entry id for show");

    // entropy ------------------------------------------------------------
    auto* ent = app.add_subcommand("entropy", "pattern-counting entropy table");
    ent->fallthrough();
    std::string ent_system, ent_mode = "global1d", ent_csv, ent_plot;
    int ent_n = 10;
    ent->add_option("--system", ent_system)->required();
    ent->add_option("--mode", ent_mode, "local | global1d | toroidal");
    ent->add_option("--n", ent_n, "number of table rows");
    ent->add_option("--csv", ent_csv, "also write the table as CSV here");
    ent->add_option("--plot", ent_plot, "write (n, estimate) pairs for plotting");

    // irreducible ----------------------------------------------------------
    auto* irr = app.add_subcommand("irreducible", "bounded strong-irreducibility check");
    irr->fallthrough();
    std::string irr_system, irr_delta = "0";
    int irr_bound = 3;
    irr->add_option("--system", irr_system)->required();
    irr->add_option("--delta", irr_delta, "shape, e.g. 0,1 or 0,0;1,0");
    irr->add_option("--bound", irr_bound);

    // decide ---------------------------------------------------------------
    auto* dec = app.add_subcommand("decide", "surjectivity and pre-injectivity");
    dec->fallthrough();
    std::string dec_rule, dec_source, dec_target;
    int dec_me_bound = 3, dec_b2o = 0;
    dec->add_option("--rule", dec_rule)->required();
    dec->add_option("--source", dec_source)->required();
    dec->add_option("--target", dec_target, "defaults to the source system");
    dec->add_option("--me-bound", dec_me_bound, "bounded search extent in d=2");
    dec->add_option("--bounded-to-one", dec_b2o,
                    "also report preimage counts over periods up to this bound");

    // homoclinic -----------------------------------------------------------
    auto* hom = app.add_subcommand("homoclinic", "census | ledrappier-kernel | wz | phi");
    hom->fallthrough();
    std::string hom_action, hom_system, hom_base = "uniform:0", hom_f, hom_delta = "0,1";
    int hom_n = 4;
    hom->add_option("action", hom_action)->required();
    hom->add_option("--system", hom_system);
    hom->add_option("--base", hom_base, "uniform:<symbol> or word:<symbols>");
    hom->add_option("--f", hom_f, "window shape");
    hom->add_option("--delta", hom_delta);
    hom->add_option("--n", hom_n, "box parameter (kernel side / phi index / wz span)");

    // periodic ---------------------------------------------------------------
    auto* per = app.add_subcommand("periodic", "Fix(H) on a fundamental domain");
    per->fallthrough();
    std::string per_system, per_periods = "2";
    per->add_option("--system", per_system)->required();
    per->add_option("--periods", per_periods, "e.g. 3 or 2,2");

    // surjunctive --------------------------------------------------------------
    auto* surj = app.add_subcommand("surjunctive", "injectivity on periodic points");
    surj->fallthrough();
    std::string surj_rule, surj_system;
    int surj_pmax = 4;
    surj->add_option("--rule", surj_rule)->required();
    surj->add_option("--system", surj_system)->required();
    surj->add_option("--p-max", surj_pmax);

    // goe-suite ------------------------------------------------------------------
    auto* suite = app.add_subcommand("goe-suite", "dichotomy consistency harness");
    suite->fallthrough();
    std::string suite_family = "eca", suite_scope = "exact";
    int suite_width = 4;
    suite->add_option("--family", suite_family, "eca | catalog | even-endo");
    suite->add_option("--scope", suite_scope, "exact (1-D decisions; the default)");
    suite->add_option("--max-width", suite_width, "window bound for even-endo");

    CLI11_PARSE(app, argc, argv);

    try {
        Timer timer;
        Json inputs, outputs;

        if (*cat) {
            inputs["action"] = cat_action;
            if (cat_action == "list") {
                Json arr = Json::array();
                for (const auto& e : catalog_entries()) {
                    Json row;
                    row["id"] = e.id;
                    row["kind"] = e.kind;
                    row["note"] = e.note;
                    arr.push_back(std::move(row));
                }
                outputs["entries"] = std::move(arr);
            } else if (cat_action == "show") {
                inputs["id"] = cat_id;
                SubshiftHandle s = catalog_system(cat_id);
                outputs["id"] = s.id();
                outputs["dimension"] = s.dimension();
                outputs["alphabet"] = s.alphabet().tokens();
                if (s.kind() == SubshiftHandle::Kind::Sofic1d)
                    outputs["deterministic_presentation"] = s.sofic().is_deterministic();
                if (s.dimension() == 1) {
                    auto words = globally_admissible_1d(s, 4, budget);
                    Json w = Json::array();
                    for (const auto& p : words) {
                        std::string t;
                        for (Symbol v : p.values) t += s.alphabet().token(v);
                        w.push_back(std::move(t));
                    }
                    outputs["words_of_length_4"] = std::move(w);
                }
            } else if (cat_action == "verify") {
                for (const auto& line : catalog_verify()) std::cout << line << "\n";
                outputs["verified"] = true;
            } else {
                throw std::invalid_argument("catalog action must be list, show, or verify");
            }
            return emit("catalog", inputs, outputs, timer.ms(), out_path);
        }

        if (*ent) {
            SubshiftHandle s = resolve_system(ent_system, inputs);
            EntropyMode mode = ent_mode == "local"      ? EntropyMode::Local
                               : ent_mode == "toroidal" ? EntropyMode::Toroidal
                                                        : EntropyMode::Global1d;
            inputs["mode"] = to_string(mode);
            inputs["n"] = ent_n;
            EntropyTable t = entropy_estimate(s, ent_n, mode, budget);
            outputs["table"] = to_json(t);
            if (s.dimension() == 1) {
                auto exact = entropy_exact_1d(s);
                char buf[32];
                if (exact) {
                    std::snprintf(buf, sizeof buf, "%.6f", *exact);
                    outputs["exact"] = buf;
                } else {
                    outputs["exact"] = "empty";
                }
            }
            if (!ent_csv.empty()) {
                std::ofstream csv(ent_csv);
                csv << entropy_table_csv(t);
            }
            if (!ent_plot.empty()) {
                std::ofstream plot(ent_plot);
                for (const auto& row : t.rows) {
                    char buf[48];
                    std::snprintf(buf, sizeof buf, "%d %.6f\n", row.n, row.estimate);
                    plot << buf;
                }
            }
            return emit("entropy", inputs, outputs, timer.ms(), out_path);
        }

        if (*irr) {
            SubshiftHandle s = resolve_system(irr_system, inputs);
            Shape delta = parse_shape(irr_delta, s.dimension());
            inputs["delta"] = to_json(delta);
            inputs["bound"] = irr_bound;
            auto v = check_delta_irreducible(s, delta, irr_bound, budget);
            outputs["verdict"] = to_json(v, s.alphabet());
            if (v.status == IrreducibilityVerdict::Status::Inconclusive) {
                emit("irreducible", inputs, outputs, timer.ms(), out_path);
                return 2;
            }
            return emit("irreducible", inputs, outputs, timer.ms(), out_path);
        }

        if (*dec) {
            SubshiftHandle source = resolve_system(dec_source, inputs);
            SubshiftHandle target =
                dec_target.empty() ? source : resolve_system(dec_target, inputs);
            LocalRule rule = resolve_rule(dec_rule, source, inputs);
            BlockCode code = make_block_code(rule, source, target,
                                             dec_rule + "@" + dec_source);
            if (code.rule.dimension == 1) {
                CodeVerdict v = decide_code(code);
                outputs["verdict"] = to_json(v, source.alphabet(), target.alphabet());
                if (dec_b2o > 0) {
                    inputs["bounded_to_one"] = dec_b2o;
                    outputs["bounded_to_one"] = to_json(bounded_to_one_check(code, dec_b2o));
                }
            } else {
                inputs["me_bound"] = dec_me_bound;
                auto r = bounded_me_search(code, dec_me_bound, budget);
                outputs["me_search"] = to_json(r, source.alphabet());
                if (r.status == MeSearchResult::Status::Inconclusive) {
                    emit("decide", inputs, outputs, timer.ms(), out_path);
                    return 2;
                }
            }
            return emit("decide", inputs, outputs, timer.ms(), out_path);
        }

        if (*hom) {
            inputs["action"] = hom_action;
            if (hom_action == "ledrappier-kernel") {
                inputs["n"] = hom_n;
                Json dims = Json::array();
                for (int side = 1; side <= hom_n; ++side) {
                    Json row;
                    row["side"] = side;
                    row["kernel_dimension"] = ledrappier_finite_support_kernel(side);
                    dims.push_back(std::move(row));
                }
                outputs["kernel"] = std::move(dims);
                return emit("homoclinic", inputs, outputs, timer.ms(), out_path);
            }
            SubshiftHandle s = resolve_system(hom_system, inputs);
            Shape delta = parse_shape(hom_delta, s.dimension());
            inputs["delta"] = to_json(delta);
            DescribedConfig base = parse_base(hom_base, s);
            inputs["base"] = hom_base;
            auto irr_verdict = check_delta_irreducible(s, delta, 3, budget);
            bool gluing =
                irr_verdict.status == IrreducibilityVerdict::Status::HoldsUpTo;
            outputs["gluing_check"] = to_json(irr_verdict, s.alphabet());

            if (hom_action == "census") {
                Shape f = parse_shape(hom_f, s.dimension());
                inputs["f"] = to_json(f);
                auto census = class_census(s, base, f, delta, gluing, budget);
                outputs["census"] = to_json(census, s.alphabet());
            } else if (hom_action == "phi") {
                inputs["n"] = hom_n;
                auto rep = phi_n_family(s, base, hom_n, delta, gluing, budget);
                outputs["phi"] = to_json(rep);
            } else if (hom_action == "wz") {
                if (s.kind() != SubshiftHandle::Kind::Sft)
                    throw std::invalid_argument("wz needs an SFT system");
                inputs["n"] = hom_n;
                // E = {0}, u1 flips the origin over the uniform background
                Shape e = Shape::origin(s.dimension());
                Shape cell = shape_sum(e, shape_sum(s.sft().window, s.sft().window));
                Symbol bg = base.background.values[0];
                std::vector<Symbol> v0(cell.size(), bg), v1(cell.size(), bg);
                v1[cell.index_of(Point(std::vector<int>(
                    static_cast<std::size_t>(s.dimension()), 0)))] = 1;
                Shape f = hom_f.empty() ? Shape::interval(0, hom_n)
                                        : parse_shape(hom_f, s.dimension());
                inputs["f"] = to_json(f);
                auto wz = wz_family(s.sft(), e, Pattern(cell, v0), Pattern(cell, v1),
                                    bg, f, budget);
                outputs["wz"] = to_json(wz, s.alphabet());
            } else {
                throw std::invalid_argument(
                    "homoclinic action must be census, ledrappier-kernel, wz, or phi");
            }
            return emit("homoclinic", inputs, outputs, timer.ms(), out_path);
        }

        if (*per) {
            SubshiftHandle s = resolve_system(per_system, inputs);
            auto periods = parse_periods(per_periods);
            inputs["periods"] = periods;
            auto pts = periodic_points(s, periods, budget);
            outputs["count"] = pts.size();
            if (pts.size() <= (std::size_t(1) << 14)) {
                Json arr = Json::array();
                for (const auto& p : pts) {
                    std::string t;
                    for (Symbol v : p.values) t += s.alphabet().token(v);
                    arr.push_back(std::move(t));
                }
                outputs["points"] = std::move(arr);
            }
            return emit("periodic", inputs, outputs, timer.ms(), out_path);
        }

        if (*surj) {
            SubshiftHandle s = resolve_system(surj_system, inputs);
            LocalRule rule = resolve_rule(surj_rule, s, inputs);
            BlockCode code = make_block_code(rule, s, s, surj_rule + "@" + surj_system);
            inputs["p_max"] = surj_pmax;
            auto rep = surjunctivity_check(code, surj_pmax, budget);
            outputs["surjunctivity"] = to_json(rep, s.alphabet());
            return emit("surjunctive", inputs, outputs, timer.ms(), out_path);
        }

        if (*suite) {
            if (suite_scope != "exact")
                throw std::invalid_argument(
                    "goe-suite families are 1-D and decided exactly; bounded 2-D "
                    "probes live under decide --me-bound");
            inputs["family"] = suite_family;
            inputs["scope"] = suite_scope;
            Alphabet bin = Alphabet::binary();
            if (suite_family == "eca") {
                auto verdicts = goe_suite_eca();
                std::size_t violations = 0;
                Json arr = Json::array();
                for (const auto& v : verdicts) {
                    if (v.consistency == "VIOLATION") ++violations;
                    arr.push_back(to_json(v, bin, bin));
                }
                outputs["verdicts"] = std::move(arr);
                outputs["violations"] = violations;
            } else if (suite_family == "catalog") {
                Json arr = Json::array();
                std::size_t violations = 0;
                for (const char* id :
                     {"identity:full-binary", "identity:golden-mean", "identity:even",
                      "xor-full", "majority3-full", "golden-even", "shift-golden",
                      "constant0-full"}) {
                    BlockCode code = catalog_code(id);
                    CodeVerdict v = decide_code(code);
                    if (v.consistency == "VIOLATION") ++violations;
                    arr.push_back(to_json(v, code.source.alphabet(),
                                          code.target.alphabet()));
                }
                outputs["verdicts"] = std::move(arr);
                outputs["violations"] = violations;
            } else if (suite_family == "even-endo") {
                inputs["max_width"] = suite_width;
                auto res = moore_failure_search(catalog_system("even"), suite_width);
                outputs["rules_checked"] = res.rules_checked;
                outputs["valid_endomorphisms"] = res.valid_endomorphisms;
                outputs["myhill_violations"] = res.myhill_violations;
                Json arr = Json::array();
                for (const auto& v : res.exhibits) arr.push_back(to_json(v, bin, bin));
                outputs["exhibits"] = std::move(arr);
            } else {
                throw std::invalid_argument("family must be eca, catalog, or even-endo");
            }
            return emit("goe-suite", inputs, outputs, timer.ms(), out_path);
        }
    } catch (const sdw::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "sdw/report.hpp"

#include <fstream>
#include <sstream>

namespace sdw {

Json to_json(const Shape& s) {
    Json arr = Json::array();
    for (const auto& p : s.points()) {
        Json pt = Json::array();
        for (int i = 0; i < p.dim(); ++i) pt.push_back(p[i]);
        arr.push_back(std::move(pt));
    }
    return arr;
}

Json to_json(const Pattern& p, const Alphabet& a) {
    Json j;
    j["support"] = to_json(p.support);
    Json vals = Json::array();
    for (Symbol v : p.values) vals.push_back(a.token(v));
    j["values"] = std::move(vals);
    return j;
}

Json to_json(const EntropyTable& t) {
    Json j;
    j["system"] = t.system_id;
    j["mode"] = to_string(t.mode);
    if (!t.note.empty()) j["note"] = t.note;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["n"] = r.n;
        row["window_cells"] = r.window_cells;
        row["count"] = r.count.to_string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", r.estimate);
        row["estimate"] = buf;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string entropy_table_csv(const EntropyTable& t) {
    std::ostringstream out;
    out << "n,window_cells,count,estimate\n";
    for (const auto& r : t.rows) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", r.estimate);
        out << r.n << "," << r.window_cells << "," << r.count.to_string() << "," << buf
            << "\n";
    }
    return out.str();
}

Json to_json(const IrreducibilityVerdict& v, const Alphabet& a) {
    Json j;
    switch (v.status) {
        case IrreducibilityVerdict::Status::HoldsUpTo:
            j["status"] = "holds-up-to";
            j["bound"] = v.bound;
            break;
        case IrreducibilityVerdict::Status::Counterexample:
            j["status"] = "counterexample";
            j["omega1"] = to_json(v.omega1);
            j["omega2"] = to_json(v.omega2);
            j["p1"] = to_json(v.p1, a);
            j["p2"] = to_json(v.p2, a);
            break;
        case IrreducibilityVerdict::Status::Inconclusive:
            j["status"] = "inconclusive";
            j["bound"] = v.bound;
            break;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json to_json(const CodeVerdict& v, const Alphabet& src, const Alphabet& tgt) {
    Json j;
    j["code"] = v.code_id;
    j["scope"] = "exact-1d";
    j["surjective"] = v.surjective;
    j["preinjective"] = v.preinjective;
    Json witnesses = Json::array();
    if (v.orphan) {
        Json w;
        w["kind"] = "orphan";
        w["pattern"] = to_json(*v.orphan, tgt);
        witnesses.push_back(std::move(w));
    }
    if (v.me_witness) {
        Json w;
        w["kind"] = "mutually-erasable";
        w["first"] = to_json(v.me_witness->first, src);
        w["second"] = to_json(v.me_witness->second, src);
        witnesses.push_back(std::move(w));
    }
    j["witnesses"] = std::move(witnesses);
    j["consistency"] = v.consistency;
    return j;
}

Json to_json(const SurjunctivityReport& r, const Alphabet& a) {
    Json j;
    j["period_bound"] = r.period_bound;
    j["injective_on_periodic"] = r.injective_on_periodic;
    Json rows = Json::array();
    for (const auto& pr : r.results) {
        Json row;
        row["periods"] = pr.periods;
        row["fixed_points"] = pr.fix_size;
        if (pr.collision) {
            row["collision_first"] = to_json(pr.collision->first, a);
            row["collision_second"] = to_json(pr.collision->second, a);
        }
        rows.push_back(std::move(row));
    }
    j["periods"] = std::move(rows);
    if (!r.injective_on_periodic && r.collision) {
        j["collision_periods"] = r.collision_periods;
        j["collision_first"] = to_json(r.collision->first, a);
        j["collision_second"] = to_json(r.collision->second, a);
    }
    return j;
}

Json to_json(const ClassCensus& c, const Alphabet& a) {
    Json j;
    j["window"] = to_json(c.window);
    j["member_count"] = c.members.size();
    j["eroded_window"] = to_json(c.eroded);
    j["compare_count"] = c.compare_count.to_string();
    j["gluing_hypothesis"] = c.gluing_hypothesis;
    j["bound_holds"] = c.bound_holds;
    if (c.partial) j["partial"] = true;
    if (c.members.size() <= (std::size_t(1) << 14)) {
        Json members = Json::array();
        for (const auto& m : c.members) {
            std::string s;
            for (Symbol v : m.values) s += a.token(v);
            members.push_back(std::move(s));
        }
        j["members"] = std::move(members);
    }
    return j;
}

Json to_json(const WzFamilyResult& w, const Alphabet& a) {
    Json j;
    Json centers = Json::array();
    for (const auto& p : w.centers) {
        Json pt = Json::array();
        for (int i = 0; i < p.dim(); ++i) pt.push_back(p[i]);
        centers.push_back(std::move(pt));
    }
    j["centers"] = std::move(centers);
    j["count"] = w.count.to_string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", w.entropy_lower_bound);
    j["entropy_lower_bound"] = buf;
    std::snprintf(buf, sizeof buf, "%.6f", w.alpha);
    j["alpha"] = buf;
    j["alpha_bound_ok"] = w.alpha_bound_ok;
    if (w.patterns.size() <= (std::size_t(1) << 14)) {
        Json pats = Json::array();
        for (const auto& p : w.patterns) pats.push_back(to_json(p, a));
        j["patterns"] = std::move(pats);
    }
    return j;
}

Json to_json(const PhiFamilyReport& r) {
    Json j;
    j["n"] = r.n;
    j["count"] = r.count.to_string();
    j["compare_count"] = r.compare_count.to_string();
    j["hypothesis_met"] = r.hypothesis_met;
    j["bound_holds"] = r.bound_holds;
    if (r.partial) j["partial"] = true;
    return j;
}

Json to_json(const MonotonicityReport& r) {
    Json j;
    j["sigma"] = to_json(r.sigma);
    j["psi"] = to_json(r.psi);
    Json gaps = Json::array();
    for (double g : r.gaps) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", g);
        gaps.push_back(buf);
    }
    j["gaps"] = std::move(gaps);
    j["containment_ok"] = r.containment_ok;
    j["all_gaps_positive"] = r.all_gaps_positive;
    return j;
}

Json to_json(const FactorEntropyReport& r) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json jr;
        jr["len"] = row.len;
        jr["image_count"] = row.image_count.to_string();
        jr["source_count_padded"] = row.source_count_padded.to_string();
        jr["ok"] = row.ok;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["rows_ok"] = r.rows_ok;
    char buf[32];
    if (r.source_exact) {
        std::snprintf(buf, sizeof buf, "%.6f", *r.source_exact);
        j["source_exact"] = buf;
    } else {
        j["source_exact"] = "empty";
    }
    if (r.image_exact) {
        std::snprintf(buf, sizeof buf, "%.6f", *r.image_exact);
        j["image_exact"] = buf;
    } else {
        j["image_exact"] = "empty";
    }
    j["inequality_ok"] = r.inequality_ok;
    return j;
}

Json to_json(const BoundedToOneReport& r) {
    Json j;
    j["k_estimate"] = r.k_estimate;
    j["unbounded_signature"] = r.unbounded_signature;
    Json rows = Json::array();
    for (const auto& [q, k] : r.profile) {
        Json jr;
        jr["period"] = q;
        jr["max_preimages"] = k.to_string();
        rows.push_back(std::move(jr));
    }
    j["profile"] = std::move(rows);
    return j;
}

Json to_json(const MeSearchResult& r, const Alphabet& a) {
    Json j;
    switch (r.status) {
        case MeSearchResult::Status::Witness: j["status"] = "witness"; break;
        case MeSearchResult::Status::NotFound: j["status"] = "not-found-up-to"; break;
        case MeSearchResult::Status::Inconclusive: j["status"] = "inconclusive"; break;
    }
    j["bound"] = r.bound;
    if (r.witness) {
        j["support"] = to_json(r.support);
        j["first"] = to_json(r.witness->first, a);
        j["second"] = to_json(r.witness->second, a);
    }
    return j;
}

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Point point_from_json(const Json& j) {
    std::vector<int> c;
    for (const auto& v : j) c.push_back(v.get<int>());
    return Point(c);
}

Pattern pattern_from_json(const Json& j, const Alphabet& a, int dimension) {
    if (j.is_array()) {
        // 1-D word form: ["1","1"] anchored at consecutive positions
        if (dimension != 1)
            throw std::invalid_argument("word-form forbidden pattern needs dimension 1");
        std::vector<Symbol> syms;
        for (const auto& tok : j) syms.push_back(a.index_of(tok.get<std::string>()));
        return Pattern::word(syms);
    }
    if (!j.contains("support") || !j.contains("values"))
        throw std::invalid_argument("pattern object needs support and values");
    std::vector<Point> pts;
    for (const auto& p : j["support"]) pts.push_back(point_from_json(p));
    std::vector<Symbol> raw;
    for (const auto& tok : j["values"]) raw.push_back(a.index_of(tok.get<std::string>()));
    if (pts.size() != raw.size())
        throw std::invalid_argument("pattern support/values length mismatch");
    // values sorted along with the support points
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return pts[x] < pts[y]; });
    std::vector<Point> sorted_pts;
    std::vector<Symbol> sorted_vals;
    for (auto i : order) {
        sorted_pts.push_back(pts[i]);
        sorted_vals.push_back(raw[i]);
    }
    return Pattern(Shape(sorted_pts), sorted_vals);
}

}  // namespace

SubshiftHandle ingest_sft_json(const Json& j, std::vector<std::string>* warnings) {
    if (!j.contains("dimension") || !j.contains("alphabet"))
        throw std::invalid_argument("sft file: dimension and alphabet are required");
    int dim = j["dimension"].get<int>();
    if (dim < 1) throw std::invalid_argument("sft file: dimension must be >= 1");
    std::vector<std::string> toks;
    for (const auto& t : j["alphabet"]) toks.push_back(t.get<std::string>());
    Alphabet a(toks);

    if (j.contains("forbidden")) {
        std::vector<Pattern> forbidden;
        for (const auto& f : j["forbidden"]) forbidden.push_back(pattern_from_json(f, a, dim));
        Shape base = Shape::origin(dim);
        if (j.contains("window")) {
            std::vector<Point> pts;
            for (const auto& p : j["window"]) pts.push_back(point_from_json(p));
            if (!pts.empty()) base = shape_union(base, Shape(pts));
        }
        SftSpec spec = sft_from_forbidden(dim, a, forbidden, base);
        if (warnings && j.contains("window") &&
            !(spec.window == normalize_window(base, dim)))
            warnings->push_back("window enlarged to cover the forbidden supports");
        return SubshiftHandle::from_sft(std::move(spec), "file-sft");
    }
    if (j.contains("window") && j.contains("allowed")) {
        std::vector<Point> pts;
        for (const auto& p : j["window"]) pts.push_back(point_from_json(p));
        Shape window(pts);
        Shape normalized = normalize_window(window, dim);
        if (warnings && normalized != window)
            warnings->push_back("window normalized: origin adjoined and symmetrized");
        std::vector<Pattern> allowed;
        for (const auto& p : j["allowed"]) allowed.push_back(pattern_from_json(p, a, dim));
        SftSpec spec = sft_from_allowed(dim, a, window, allowed);
        return SubshiftHandle::from_sft(std::move(spec), "file-sft");
    }
    throw std::invalid_argument("sft file: need either forbidden or window+allowed");
}

SubshiftHandle ingest_sft(const std::string& path, std::vector<std::string>* warnings) {
    return ingest_sft_json(load_json(path), warnings);
}

SubshiftHandle ingest_sofic_json(const Json& j) {
    if (!j.contains("alphabet") || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("sofic file: alphabet, vertices, edges are required");
    std::vector<std::string> toks;
    for (const auto& t : j["alphabet"]) toks.push_back(t.get<std::string>());
    LabeledGraph g;
    g.alphabet = Alphabet(toks);
    g.vertex_count = j["vertices"].get<int>();
    for (const auto& e : j["edges"]) {
        int from = e[0].get<int>();
        int to = e[1].get<int>();
        if (from < 0 || from >= g.vertex_count || to < 0 || to >= g.vertex_count)
            throw std::invalid_argument("sofic file: edge endpoint out of range");
        g.edges.push_back({from, to, g.alphabet.index_of(e[2].get<std::string>())});
    }
    return SubshiftHandle::from_sofic(std::move(g), "file-sofic");
}

SubshiftHandle ingest_sofic(const std::string& path) {
    return ingest_sofic_json(load_json(path));
}

LocalRule ingest_rule_json(const Json& j) {
    if (!j.contains("dimension") || !j.contains("alphabet") ||
        !j.contains("neighborhood") || !j.contains("table"))
        throw std::invalid_argument(
            "rule file: dimension, alphabet, neighborhood, table are required");
    int dim = j["dimension"].get<int>();
    std::vector<std::string> toks;
    for (const auto& t : j["alphabet"]) toks.push_back(t.get<std::string>());
    Alphabet src(toks);
    Alphabet tgt = src;
    if (j.contains("target_alphabet")) {
        std::vector<std::string> tt;
        for (const auto& t : j["target_alphabet"]) tt.push_back(t.get<std::string>());
        tgt = Alphabet(tt);
    }
    std::vector<Point> pts;
    for (const auto& p : j["neighborhood"]) pts.push_back(point_from_json(p));
    Shape s(pts);
    std::vector<Symbol> table;
    for (const auto& t : j["table"]) table.push_back(tgt.index_of(t.get<std::string>()));
    return LocalRule::from_table(dim, src, tgt, s, std::move(table));
}

LocalRule ingest_rule(const std::string& path) { return ingest_rule_json(load_json(path)); }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ExperimentReport make_report(const std::string& experiment, Json inputs, Json outputs,
                             double wall_ms) {
    ExperimentReport r;
    r.experiment = experiment;
    r.inputs = std::move(inputs);
    r.outputs = std::move(outputs);
    r.wall_ms = wall_ms;
    r.version = kArtifactVersion;
    r.report_hash = fnv1a(experiment + r.inputs.dump() + r.outputs.dump());
    return r;
}

Json to_json(const ExperimentReport& r) {
    Json j;
    j["experiment"] = r.experiment;
    j["version"] = r.version;
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(r.report_hash));
    j["report_hash"] = buf;
    j["wall_ms"] = r.wall_ms;  // excluded from the hash
    return j;
}

}  // namespace sdw

#include "ordex/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ordex {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

FamilyDocument family_from_json(const std::string& text) {
    const json j = json::parse(text);
    FamilyDocument doc;
    doc.cyclic = j.value("cyclic", false);
    const Symbol universe = j.at("universe").get<Symbol>();
    if (universe < 0) throw std::invalid_argument("family: negative universe");

    std::vector<std::vector<Symbol>> seqs;
    for (const auto& arr : j.at("orders")) seqs.push_back(arr.get<std::vector<Symbol>>());

    if (doc.cyclic) {
        doc.raw_cyclic.universe_size = universe;
        for (auto& s : seqs) doc.raw_cyclic.orders.push_back(CyclicOrder::from_sequence(std::move(s)));
        doc.linear = cyclic_family_to_linear(doc.raw_cyclic);
    } else {
        doc.linear.universe_size = universe;
        for (auto& s : seqs) doc.linear.orders.emplace_back(std::move(s));
    }
    if (!doc.linear.check_well_formed())
        throw std::invalid_argument("family: repeated symbols or ids outside the universe");
    return doc;
}

FamilyDocument load_family_file(const std::string& path) {
    return family_from_json(read_text_file(path));
}

std::string family_to_json(const OrderFamily& f) {
    json j;
    j["universe"] = f.universe_size;
    j["orders"] = json::array();
    for (const auto& o : f.orders) j["orders"].push_back(o.seq);
    return j.dump(2) + "\n";
}

void save_family_file(const std::string& path, const OrderFamily& f) {
    write_text_file(path, family_to_json(f));
}

FamilySeedSpec seed_spec_from_json(const std::string& text) {
    const json j = json::parse(text);
    FamilySeedSpec s;
    s.n = j.at("n").get<int>();
    s.universe = j.at("universe").get<Symbol>();
    s.min_len = j.value("min_len", 0);
    s.max_len = j.at("max_len").get<int>();
    s.seed = j.value("seed", static_cast<std::uint64_t>(0));
    return s;
}

FamilySeedSpec load_seed_spec_file(const std::string& path) {
    return seed_spec_from_json(read_text_file(path));
}

ZeroOneMatrix matrix_from_text(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    return matrix_from_rows(rows);
}

ZeroOneMatrix load_matrix_file(const std::string& path) {
    return matrix_from_text(read_text_file(path));
}

std::string matrix_to_text(const ZeroOneMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows) * (m.cols + 1));
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) out.push_back(m.at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

void save_matrix_file(const std::string& path, const ZeroOneMatrix& m) {
    write_text_file(path, matrix_to_text(m));
}

EdgeOrderedGraph eograph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge-ordered file: missing header");
    std::vector<std::pair<int, int>> edges(m);
    for (auto& [u, v] : edges)
        if (!(in >> u >> v)) throw std::invalid_argument("edge-ordered file: truncated edge list");
    return make_edge_ordered(n, std::move(edges));
}

EdgeOrderedGraph load_eograph_file(const std::string& path) {
    return eograph_from_text(read_text_file(path));
}

std::string eograph_to_text(const EdgeOrderedGraph& g) {
    std::ostringstream out;
    out << g.num_vertices << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

void save_eograph_file(const std::string& path, const EdgeOrderedGraph& g) {
    write_text_file(path, eograph_to_text(g));
}

GeometricGraph geometry_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("geometry file: missing header");
    std::vector<Point> pts(n);
    for (auto& p : pts)
        if (!(in >> p.x >> p.y)) throw std::invalid_argument("geometry file: truncated points");
    std::vector<std::pair<int, int>> edges(m);
    for (auto& [u, v] : edges)
        if (!(in >> u >> v)) throw std::invalid_argument("geometry file: truncated edge list");
    return make_geometric(std::move(pts), std::move(edges));
}

GeometricGraph load_geometry_file(const std::string& path) {
    return geometry_from_text(read_text_file(path));
}

std::string geometry_to_text(const GeometricGraph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.edges.size() << '\n';
    for (const auto& p : g.points) out << p.x << ' ' << p.y << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

void save_geometry_file(const std::string& path, const GeometricGraph& g) {
    write_text_file(path, geometry_to_text(g));
}

namespace {

const char* status_str(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::pass: return "pass";
        case CheckResult::Status::fail: return "fail";
        default: return "skipped";
    }
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["status"] = status_str(c.status);
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

std::string audit_report_to_json(const AuditReport& rep) {
    json j;
    j["schema"] = "ordex-audit-v1";
    j["n_orders"] = rep.n_orders;
    j["universe"] = rep.universe_size;
    j["s_value"] = rep.s_value;
    j["sum_sq_lengths"] = rep.sum_sq_lengths;
    j["lower_bound"] = rep.lower_bound;
    j["intersection_sum"] = rep.intersection_sum;
    j["gain_sum"] = rep.gain_sum;
    j["quad_sum"] = rep.quad_sum;
    j["sab_total"] = rep.sab_total;
    j["cross_total"] = rep.cross_total;
    j["all_unconditional_pass"] = rep.all_unconditional_pass();

    json pairs = json::array();
    for (const auto& p : rep.pairs) {
        json e;
        e["i"] = p.i;
        e["j"] = p.j;
        e["fsum"] = {p.fsum[0], p.fsum[1]};
        e["inter"] = {p.inter[0], p.inter[1]};
        e["intrev"] = {p.intrev[0], p.intrev[1]};
        e["inter_full"] = p.inter_full;
        pairs.push_back(e);
    }
    j["pairs"] = pairs;

    json sab = json::array();
    for (const auto& [key, v] : rep.sab)
        sab.push_back({{"a", key.first}, {"b", key.second}, {"s", v}});
    j["sab"] = sab;

    json viol = json::array();
    for (const auto& w : rep.violations)
        viol.push_back({{"i", w.i}, {"j", w.j}, {"triple", {w.a, w.b, w.c}}});
    j["violations"] = viol;

    j["checks"] = checks_to_json(rep.checks);

    j["informational"] = {
        {"s_k_bound_lhs", rep.s_k_bound_lhs},
        {"s_k_bound_rhs", rep.s_k_bound_rhs},
        {"quad_k_bound_lhs", rep.quad_k_bound_lhs},
        {"quad_k_bound_rhs", rep.quad_k_bound_rhs},
        {"almost_regular_for_k", rep.almost_regular_for_k},
    };
    return j.dump(2) + "\n";
}

std::string regularity_report_to_json(const RegularityReport& rep) {
    json j;
    j["schema"] = "ordex-regularity-v1";
    j["delta"] = rep.delta;
    j["Delta"] = rep.Delta;
    j["k_achieved"] = rep.k_achieved.str();
    j["retained_edges"] = rep.retained_edges;
    j["retained_fraction"] = rep.retained_fraction.str();
    j["target_met"] = rep.target_met;
    return j.dump(2) + "\n";
}

}  // namespace ordex

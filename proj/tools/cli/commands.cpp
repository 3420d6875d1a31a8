#include "commands.hpp"

#include <array>
#include <cmath>
#include <ostream>

#include "hkgic/hkregion.hpp"
#include "hkgic/macgeom.hpp"
#include "hkgic/version.hpp"
#include "output.hpp"

namespace hkgic::cli {

namespace {

Json config_echo(const RunConfig& cfg, const std::string& command) {
    const auto& ch = cfg.channel;
    Json echo{{"command", command},
              {"p1", json_number(ch.p1())},
              {"p2", json_number(ch.p2())},
              {"a", json_number(ch.a())},
              {"b", json_number(ch.b())},
              {"n1", json_number(ch.n1())},
              {"n2", json_number(ch.n2())},
              {"grid", cfg.grid}};
    if (command == "boundary") echo["mu"] = json_numbers(cfg.mus);
    if (command == "mac-geometry") {
        echo["lambda1"] = json_number(cfg.lambda1);
        echo["lambda2"] = json_number(cfg.lambda2);
    }
    return echo;
}

Json meta(const RunConfig& cfg) {
    return Json{{"tool", "hkgic"},
                {"version", kVersion},
                {"tolerances", {{"geom", json_number(cfg.tol.geom)}, {"claim", json_number(cfg.tol.claim)}}}};
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json points_json(std::span<const Point2> pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(Json::array({json_number(p.x), json_number(p.y)}));
    return arr;
}

void points_csv(std::ostream& out, const std::string& kind, std::span<const Point2> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << kind << ',' << i << ',' << format_number(pts[i].x) << ',' << format_number(pts[i].y) << '\n';
    }
}

// The value of `name` for a point over `coords`, or NaN when absent.
double coordinate(const std::vector<std::string>& coords, std::span<const double> x, const std::string& name) {
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == name) return x[j];
    }
    return std::nan("");
}

void layer_row_csv(std::ostream& out, const std::string& label, const std::string& kind,
                   const std::vector<std::string>& coords, std::span<const double> x, const std::string& bound) {
    out << label << ',' << kind;
    for (const auto& name : kLayerCoords) {
        const double v = coordinate(coords, x, name);
        out << ',' << (std::isnan(v) ? "" : format_number(v));
    }
    out << ',' << bound << '\n';
}

}  // namespace

void cmd_region(const RunConfig& cfg, std::ostream& out) {
    const auto u = union_over_splits(cfg.channel, cfg.grid, cfg.tol.geom);
    if (cfg.format == Format::kJson) {
        write_json(out, Json{{"config_echo", config_echo(cfg, "region")},
                             {"vertices",
                              {{"hull", points_json(u.hull.vertices())}, {"raw_union", points_json(u.raw_union)}}},
                             {"meta", meta(cfg)}});
        return;
    }
    out << "region,index,r1,r2\n";
    points_csv(out, "hull", u.hull.vertices());
    points_csv(out, "raw_union", u.raw_union);
}

void cmd_boundary(const RunConfig& cfg, std::ostream& out) {
    const auto trace = trace_boundary(cfg.channel, cfg.mus, cfg.grid, cfg.tol.geom);
    if (cfg.format == Format::kJson) {
        Json rows = Json::array();
        for (const auto& e : trace) {
            rows.push_back({{"mu", json_number(e.mu)},
                            {"lambda1", json_number(e.best_split.lambda1())},
                            {"lambda2", json_number(e.best_split.lambda2())},
                            {"r1", json_number(e.rate_pair.r1)},
                            {"r2", json_number(e.rate_pair.r2)},
                            {"objective", json_number(e.objective_value)}});
        }
        write_json(out, Json{{"config_echo", config_echo(cfg, "boundary")}, {"rows", rows}, {"meta", meta(cfg)}});
        return;
    }
    out << "mu,lambda1,lambda2,r1,r2,objective\n";
    for (const auto& e : trace) {
        out << format_number(e.mu) << ',' << format_number(e.best_split.lambda1()) << ','
            << format_number(e.best_split.lambda2()) << ',' << format_number(e.rate_pair.r1) << ','
            << format_number(e.rate_pair.r2) << ',' << format_number(e.objective_value) << '\n';
    }
}

void cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto all = verify_over_splits(cfg.channel, cfg.grid, cfg.tol);
    std::array<int, 3> counts{};
    for (const auto& s : all) {
        for (const auto& r : s.reports) ++counts[static_cast<std::size_t>(r.verdict)];
    }
    const int holds = counts[static_cast<std::size_t>(Verdict::kHolds)];
    const int fails = counts[static_cast<std::size_t>(Verdict::kFails)];
    const int degenerate = counts[static_cast<std::size_t>(Verdict::kDegenerate)];
    if (cfg.format == Format::kJson) {
        Json rows = Json::array();
        for (const auto& s : all) {
            for (const auto& r : s.reports) {
                rows.push_back({{"lambda1", json_number(s.split.lambda1())},
                                {"lambda2", json_number(s.split.lambda2())},
                                {"claim", to_string(r.id)},
                                {"verdict", to_string(r.verdict)},
                                {"violation", json_number(r.violation)},
                                {"tolerance", json_number(r.tolerance)},
                                {"witness", json_numbers(r.witness)},
                                {"detail", r.detail}});
            }
        }
        write_json(out, Json{{"config_echo", config_echo(cfg, "verify")},
                             {"rows", rows},
                             {"summary", {{"holds", holds}, {"fails", fails}, {"degenerate", degenerate}}},
                             {"meta", meta(cfg)}});
        return;
    }
    out << "lambda1,lambda2,claim,verdict,violation,tolerance,witness,detail\n";
    for (const auto& s : all) {
        for (const auto& r : s.reports) {
            out << format_number(s.split.lambda1()) << ',' << format_number(s.split.lambda2()) << ','
                << to_string(r.id) << ',' << to_string(r.verdict) << ',' << format_number(r.violation) << ','
                << format_number(r.tolerance) << ',' << join_numbers(r.witness) << ',' << csv_field(r.detail)
                << '\n';
        }
    }
    out << "# summary: holds=" << holds << " fails=" << fails << " degenerate=" << degenerate << '\n';
}

void cmd_mac_geometry(const RunConfig& cfg, std::ostream& out) {
    const auto split = PowerSplit::from_private_fractions(cfg.channel, cfg.lambda1, cfg.lambda2);
    const auto macs = build_mac_projections(build_instance(cfg.channel, split), cfg.tol.geom);
    const std::array<const MacProjection*, 4> all{&macs.mac1_3d, &macs.mac2_3d, &macs.mac1, &macs.mac2};
    if (cfg.format == Format::kJson) {
        Json rows = Json::object();
        Json vertices = Json::object();
        Json corners = Json::object();
        for (const auto* m : all) {
            Json list = Json::array();
            for (const auto& h : m->polytope.rows()) {
                list.push_back({{"coeffs", json_numbers(h.coeffs)}, {"bound", json_number(h.bound)}});
            }
            const auto label = to_string(m->label);
            rows[label] = {{"coords", m->polytope.coords()}, {"halfspaces", list}};
            if (m->polytope.dimension() == 2) {
                const auto region = extract_region2d(m->polytope, cfg.tol.geom);
                vertices[label] = points_json(region.vertices());
                const auto c = corner_points(*m, cfg.tol.geom);
                corners[label] = {{"upper", points_json(std::array{c.upper})[0]},
                                  {"lower", points_json(std::array{c.lower})[0]}};
            }
        }
        write_json(out, Json{{"config_echo", config_echo(cfg, "mac-geometry")},
                             {"rows", rows},
                             {"vertices", vertices},
                             {"corners", corners},
                             {"meta", meta(cfg)}});
        return;
    }
    out << "label,kind,ru1,ru2,rv1,rv2,bound\n";
    for (const auto* m : all) {
        const auto label = to_string(m->label);
        const auto& coords = m->polytope.coords();
        for (const auto& h : m->polytope.rows()) {
            layer_row_csv(out, label, "row", coords, h.coeffs, format_number(h.bound));
        }
        if (m->polytope.dimension() == 2) {
            const auto region = extract_region2d(m->polytope, cfg.tol.geom);
            for (const auto& v : region.vertices()) {
                layer_row_csv(out, label, "vertex", coords, std::array{v.x, v.y}, "");
            }
            const auto c = corner_points(*m, cfg.tol.geom);
            layer_row_csv(out, label, "upper_corner", coords, std::array{c.upper.x, c.upper.y}, "");
            layer_row_csv(out, label, "lower_corner", coords, std::array{c.lower.x, c.lower.y}, "");
        }
    }
}

}  // namespace hkgic::cli

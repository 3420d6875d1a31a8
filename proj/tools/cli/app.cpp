#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "hkgic/version.hpp"

namespace hkgic::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path + " for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw IoError("write to " + path + " failed");
    }
}

void add_channel_option(CLI::App& app, const std::string& name, std::optional<double>& slot,
                        const std::string& help) {
    app.add_option_function<double>("--" + name, [&slot](const double& v) { slot = v; }, help);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Han-Kobayashi rate regions of the two-user Gaussian interference channel", "hkgic"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "key = value file; flags override it");
    app.allow_config_extras(false);
    app.require_subcommand(1);

    RawConfig raw;
    add_channel_option(app, "p1", raw.p1, "transmit power of user 1");
    add_channel_option(app, "p2", raw.p2, "transmit power of user 2");
    add_channel_option(app, "a", raw.a, "cross gain from user 2 into receiver 1");
    add_channel_option(app, "b", raw.b, "cross gain from user 1 into receiver 2");
    add_channel_option(app, "n1", raw.n1, "noise variance at receiver 1");
    add_channel_option(app, "n2", raw.n2, "noise variance at receiver 2");
    app.add_option("--grid", raw.grid, "split-grid points per axis")->capture_default_str();
    app.add_option_function<std::vector<std::string>>(
           "--mu",
           [&raw](const std::vector<std::string>& items) {
               std::string joined;
               for (std::size_t i = 0; i < items.size(); ++i) joined += (i ? "," : "") + items[i];
               raw.mu = joined;
           },
           "comma-separated weights, inf allowed");
    app.add_option("--format", raw.format, "csv or json")->capture_default_str();
    app.add_option("--out", raw.out, "output path (default: standard output)");
    app.add_option("--tol-geom", raw.tol_geom, "geometric tolerance")->capture_default_str();
    app.add_option("--tol-claim", raw.tol_claim, "claim tolerance")->capture_default_str();
    app.add_option("--lambda1", raw.lambda1, "private fraction of user 1 (mac-geometry)")->capture_default_str();
    app.add_option("--lambda2", raw.lambda2, "private fraction of user 2 (mac-geometry)")->capture_default_str();

    const std::map<std::string, std::function<void(const RunConfig&, std::ostream&)>> commands{
        {"region", cmd_region},
        {"boundary", cmd_boundary},
        {"verify", cmd_verify},
        {"mac-geometry", cmd_mac_geometry},
    };
    app.add_subcommand("region", "convex hull and raw union of the region over the split grid");
    app.add_subcommand("boundary", "weighted sum-rate optimum for each weight");
    app.add_subcommand("verify", "projection-geometry claim reports over the split grid");
    app.add_subcommand("mac-geometry", "MAC1, MAC2, mac1 and mac2 for one split");
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::FileError& e) {
        err << "hkgic: " << e.what() << '\n';
        return kExitIo;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "hkgic: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        const RunConfig cfg = validate(raw);
        const std::string name = app.get_subcommands().front()->get_name();
        std::ostringstream buf;
        commands.at(name)(cfg, buf);
        if (cfg.out.empty()) {
            out << buf.str();
            out.flush();
            if (!out) throw IoError("write to standard output failed");
        } else {
            write_file(cfg.out, buf.str());
        }
    } catch (const ConfigError& e) {
        err << "hkgic: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "hkgic: io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "hkgic: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace hkgic::cli

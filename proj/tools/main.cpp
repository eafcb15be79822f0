#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhardy/factorization.hpp"
#include "qhardy/hardy.hpp"
#include "qhardy/json_io.hpp"
#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"
#include "qhardy/slice.hpp"
#include "qhardy/zeros.hpp"

namespace {

using qhardy::json;

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 1;
constexpr int kExitInput = 2;

std::vector<double> parse_doubles(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + ": \"" + item + "\" is not a number");
        }
        if (used != item.size())
            throw std::invalid_argument(flag + ": \"" + item + "\" is not a number");
        out.push_back(v);
    }
    return out;
}

qhardy::Quaternion parse_quaternion(const std::string& text, const std::string& flag) {
    const std::vector<double> v = parse_doubles(text, flag);
    if (v.size() != 4) throw std::invalid_argument(flag + ": expected w,x,y,z");
    return {v[0], v[1], v[2], v[3]};
}

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    const std::vector<double> v = parse_doubles(text, "--p");
    if (v.size() != 1) throw std::invalid_argument("--p: expected one exponent");
    return v[0];
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(*path);
    if (!out) throw std::invalid_argument("cannot open output file: " + *path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

/// Shared flag set; each field keeps its resolved value for the config echo.
struct CommonOptions {
    std::string input;
    std::optional<std::string> output;
    std::optional<std::string> unit_text;
    std::size_t nodes = 0;
    std::optional<std::string> rgrid_text;
    std::size_t truncation = 128;
    std::uint64_t seed = 0;

    qhardy::QuadratureSpec quadrature() const {
        qhardy::QuadratureSpec spec;
        spec.circle_nodes = nodes;
        spec.seed = seed;
        if (rgrid_text) {
            spec.r_grid = parse_doubles(*rgrid_text, "--rgrid");
            if (spec.r_grid.empty())
                throw std::invalid_argument("--rgrid: empty radius grid");
        }
        spec.validate();
        return spec;
    }

    qhardy::ImaginaryUnit unit_or_i() const {
        if (!unit_text) return qhardy::ImaginaryUnit::i();
        return qhardy::ImaginaryUnit(parse_quaternion(*unit_text, "--unit"));
    }

    json config_echo(const std::string& command, const qhardy::QuadratureSpec& spec,
                     std::size_t resolved_nodes) const {
        json cfg{{"command", command},
                 {"input", input},
                 {"output", output ? json(*output) : json(nullptr)},
                 {"nodes", resolved_nodes},
                 {"rgrid", spec.radii()},
                 {"truncation", truncation},
                 {"seed", seed}};
        cfg["unit"] = qhardy::to_json(unit_or_i().q());
        return cfg;
    }
};

int cmd_eval(const CommonOptions& opt, const std::vector<std::string>& at_texts) {
    const qhardy::RegularSeries f =
        qhardy::series_from_json(load_json_file(opt.input), "series");
    json values = json::array();
    for (const auto& text : at_texts) {
        const qhardy::Quaternion q = parse_quaternion(text, "--at");
        const qhardy::EvalResult r = f.eval_checked(q);
        values.push_back(json{{"point", qhardy::to_json(q)},
                              {"value", qhardy::to_json(r.value)},
                              {"tail_bound", std::isfinite(r.tail_bound)
                                                 ? json(r.tail_bound)
                                                 : json("inf")}});
    }
    const qhardy::QuadratureSpec spec = opt.quadrature();
    json out{{"config", opt.config_echo("eval", spec, spec.nodes_for(f.degree()))},
             {"values", std::move(values)}};
    write_text(opt.output, out.dump(2));
    return kExitOk;
}

int cmd_norm(const CommonOptions& opt, const std::string& p_text) {
    const double p = parse_exponent(p_text);
    const qhardy::RegularSeries f =
        qhardy::series_from_json(load_json_file(opt.input), "series");
    const qhardy::QuadratureSpec spec = opt.quadrature();
    json result;
    if (opt.unit_text && std::isfinite(p)) {
        result = qhardy::to_json(qhardy::slice_norm(f, opt.unit_or_i(), p, spec));
        result["p"] = p;
    } else {
        result = qhardy::to_json(qhardy::hardy_norm(f, p, spec));
    }
    json out{{"config", opt.config_echo("norm", spec, spec.nodes_for(f.degree()))},
             {"norm", std::move(result)}};
    write_text(opt.output, out.dump(2));
    return kExitOk;
}

int cmd_zeros(const CommonOptions& opt) {
    const qhardy::RegularSeries f =
        qhardy::series_from_json(load_json_file(opt.input), "series");
    const std::vector<qhardy::ZeroRecord> records = qhardy::find_zeros(f);
    bool unclassified_inside = false;
    for (const auto& r : records)
        if (r.kind == qhardy::ZeroKind::Unclassified && r.inside_ball)
            unclassified_inside = true;
    const qhardy::QuadratureSpec spec = opt.quadrature();
    json out{{"config", opt.config_echo("zeros", spec, spec.nodes_for(f.degree()))},
             {"zeros", qhardy::to_json(records)}};
    write_text(opt.output, out.dump(2));
    return unclassified_inside ? kExitCertificate : kExitOk;
}

int cmd_blaschke(const CommonOptions& opt, bool plain) {
    const json in = load_json_file(opt.input);
    if (!in.is_array()) throw std::invalid_argument("targets: expected an array of [w,x,y,z]");
    std::vector<qhardy::Quaternion> targets;
    for (std::size_t n = 0; n < in.size(); ++n)
        targets.push_back(
            qhardy::quaternion_from_json(in[n], "targets[" + std::to_string(n) + "]"));

    const qhardy::BlaschkeProduct product =
        plain ? qhardy::finite_blaschke(targets, opt.truncation)
              : qhardy::prescribed_zero_blaschke(targets, opt.truncation);

    double worst = 0.0;
    json residuals = json::array();
    for (const auto& a : targets) {
        const double r = product.series.eval(a).norm();
        residuals.push_back(r);
        if (!plain) worst = std::max(worst, r);
    }
    const qhardy::QuadratureSpec spec = opt.quadrature();
    json out{{"config", opt.config_echo(plain ? "blaschke-plain" : "blaschke", spec,
                                        spec.nodes_for(product.series.degree()))},
             {"product", qhardy::to_json(product)},
             {"target_residuals", std::move(residuals)},
             {"blaschke_condition", qhardy::blaschke_condition(targets)}};
    write_text(opt.output, out.dump(2));
    return worst > 1e-8 ? kExitCertificate : kExitOk;
}

int cmd_factor(const CommonOptions& opt, const std::string& mode, const std::string& p_text) {
    const qhardy::RegularSeries f =
        qhardy::series_from_json(load_json_file(opt.input), "series");
    const qhardy::QuadratureSpec spec = opt.quadrature();
    const json cfg = opt.config_echo("factor-" + mode, spec, spec.nodes_for(f.degree()));

    if (mode == "extract") {
        const qhardy::ZeroExtraction ze = qhardy::extract_zeros(f, opt.truncation);
        json out{{"config", cfg}, {"extraction", qhardy::to_json(ze)}};
        write_text(opt.output, out.dump(2));
        return ze.residual <= 1e-6 ? kExitOk : kExitCertificate;
    }
    if (mode == "split") {
        const qhardy::OuterInnerSplit split =
            qhardy::outer_inner_split(f, opt.unit_or_i(), opt.truncation, spec);
        json out{{"config", cfg}, {"split", qhardy::to_json(split)}};
        write_text(opt.output, out.dump(2));
        return split.certificates.pass() ? kExitOk : kExitCertificate;
    }
    if (mode == "certificate") {
        if (p_text.empty())
            throw std::invalid_argument("factor --mode certificate requires --p");
        const qhardy::OuterCertificateReport rep =
            qhardy::outer_certificate(f, parse_exponent(p_text), opt.truncation, spec);
        json out{{"config", cfg}, {"certificate", qhardy::to_json(rep)}};
        write_text(opt.output, out.dump(2));
        return kExitOk;
    }
    throw std::invalid_argument("--mode: expected extract, split, or certificate");
}

int cmd_trace(const CommonOptions& opt) {
    const qhardy::RegularSeries f =
        qhardy::series_from_json(load_json_file(opt.input), "series");
    const qhardy::QuadratureSpec spec = opt.quadrature();
    const qhardy::BoundaryTrace trace = qhardy::boundary_trace(f, opt.unit_or_i(), spec);

    std::ostringstream csv;
    csv << "theta,w,x,y,z,abs\n";
    csv.precision(17);
    for (std::size_t k = 0; k < trace.thetas.size(); ++k) {
        const qhardy::Quaternion& v = trace.values[k];
        csv << trace.thetas[k] << ',' << v.w << ',' << v.x << ',' << v.y << ',' << v.z << ','
            << v.norm() << '\n';
    }

    json flagged = json::array();
    for (std::size_t k = 0; k < trace.node_ok.size(); ++k)
        if (!trace.node_ok[k]) flagged.push_back(k);
    json cfg{{"config", opt.config_echo("trace", spec, trace.thetas.size())},
             {"nodes_total", trace.thetas.size()},
             {"nodes_flagged", std::move(flagged)}};

    // CSV keeps its pinned columns; the resolved config goes to the other
    // stream so both stay machine-readable.
    if (opt.output) {
        write_text(opt.output, csv.str());
        std::cout << cfg.dump(2) << '\n';
    } else {
        std::cout << csv.str();
        std::cerr << cfg.dump(2) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy space toolkit for slice regular functions on the quaternionic ball"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string output_text;
    std::vector<std::string> at_texts;
    std::string p_text;
    std::string mode = "split";
    bool plain = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", opt.input, "input JSON file");
        if (needs_input) in->required();
        sub->add_option("--output", output_text, "output file (default: stdout)");
        sub->add_option("--unit", opt.unit_text, "imaginary unit as w,x,y,z");
        sub->add_option("--nodes", opt.nodes, "circle quadrature nodes (0 = automatic)");
        sub->add_option("--rgrid", opt.rgrid_text, "comma-separated radius grid in (0,1)");
        sub->add_option("--truncation", opt.truncation, "series truncation degree");
        sub->add_option("--seed", opt.seed, "sampling seed");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a series at points");
    add_common(eval, true);
    eval->add_option("--at", at_texts, "evaluation point as w,x,y,z (repeatable)")->required();

    CLI::App* norm = app.add_subcommand("norm", "Hardy or slice norm");
    add_common(norm, true);
    norm->add_option("--p", p_text, "exponent (number or inf)")->required();

    CLI::App* zeros = app.add_subcommand("zeros", "locate and classify zeros");
    add_common(zeros, true);

    CLI::App* blaschke = app.add_subcommand("blaschke", "Blaschke product from targets");
    add_common(blaschke, true);
    blaschke->add_flag("--plain", plain,
                       "use the targets as factor centres without zero correction");

    CLI::App* factor = app.add_subcommand("factor", "factorization drivers");
    add_common(factor, true);
    factor->add_option("--mode", mode, "extract | split | certificate");
    factor->add_option("--p", p_text, "exponent for the outer certificate");

    CLI::App* trace = app.add_subcommand("trace", "boundary trace CSV");
    add_common(trace, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (!output_text.empty()) opt.output = output_text;

    try {
        if (eval->parsed()) return cmd_eval(opt, at_texts);
        if (norm->parsed()) return cmd_norm(opt, p_text);
        if (zeros->parsed()) return cmd_zeros(opt);
        if (blaschke->parsed()) return cmd_blaschke(opt, plain);
        if (factor->parsed()) return cmd_factor(opt, mode, p_text);
        if (trace->parsed()) return cmd_trace(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

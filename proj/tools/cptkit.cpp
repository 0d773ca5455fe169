// cptkit command line: build CPT operators, run verification suites, sweep
// the alignment protocol, and encode/decode through the DFS codec.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 capacity error.

#include "cptkit/alignment.hpp"
#include "cptkit/dfs_codec.hpp"
#include "cptkit/io.hpp"
#include "cptkit/linalg.hpp"
#include "cptkit/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace cptkit;

int parse_spin_token(const std::string& token)
{
    // "n" means integer spin n, "n/2" means half-integer; stored as 2s.
    const auto to_int = [&](const std::string& text) {
        try {
            return std::stoi(text);
        } catch (const std::exception&) {
            throw UsageError("cannot parse spin token '" + token + "'");
        }
    };
    const auto slash = token.find('/');
    int two_s = 0;
    if (slash == std::string::npos) {
        two_s = 2 * to_int(token);
    } else {
        if (token.substr(slash + 1) != "2")
            throw UsageError("spin denominators other than 2 are not supported");
        two_s = to_int(token.substr(0, slash));
    }
    if (two_s < 1)
        throw UsageError("spin must be a positive half-integer (2s >= 1)");
    return two_s;
}

std::vector<double> parse_double_list(const std::string& csv)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& csv)
{
    // Accepts "1,2,5" and ranges "1:8".
    std::vector<unsigned> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(static_cast<unsigned>(std::stoul(item)));
        } else {
            const unsigned lo = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
            const unsigned hi = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
            for (unsigned v = lo; v <= hi; ++v)
                out.push_back(v);
        }
    }
    return out;
}

std::vector<cplx> parse_message(const std::string& text, std::size_t dim,
                                std::uint64_t seed)
{
    if (text == "random") {
        Rng rng(derive_seed(seed, "cli-message"));
        return random_state(dim, rng).amplitudes();
    }
    // "re:im" pairs or plain reals, comma separated.
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            out.emplace_back(std::stod(item), 0.0);
        else
            out.emplace_back(std::stod(item.substr(0, colon)),
                             std::stod(item.substr(colon + 1)));
    }
    double norm_sq = 0.0;
    for (const cplx& a : out)
        norm_sq += std::norm(a);
    if (norm_sq > 0.0)
        for (cplx& a : out)
            a /= std::sqrt(norm_sq);
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LookupError("cannot read file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string timestamp_now()
{
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format; // per-command default: reports json, sweeps csv
    double tol = tol::algebra;
    bool stamp = false;
};

int emit_report(Report report, const GlobalOptions& global)
{
    if (global.stamp)
        report.timestamp = timestamp_now();
    const std::string format = global.format.empty() ? "json" : global.format;
    if (format != "json" && format != "csv")
        throw UsageError("--format must be json or csv");
    const std::string text = format == "csv" ? to_csv(report) : to_json(report);
    if (!global.out.empty())
        write_text_file(global.out, text);
    else
        std::cout << text;
    if (!report.all_pass()) {
        for (const auto& name : report.failing())
            std::cerr << "FAILED: " << name << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cptkit: unitary CPT operators, their resource theory, "
                 "and the CPT-superselection toolbox"};
    app.fallthrough(true); // global flags usable after subcommands
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "master seed for all randomness");
    app.add_option("--out", global.out, "output path (stdout when omitted)");
    app.add_option("--format", global.format, "json|csv (sweep only)");
    app.add_option("--tol", global.tol, "algebraic tolerance for suite checks");
    app.add_flag("--stamp", global.stamp, "include a wall-clock timestamp in reports");

    std::string spin = "1/2";
    bool massless = false;
    std::string phases_mode = "zero";
    std::string phases_file;

    auto add_space_options = [&](CLI::App* cmd, bool with_phases) {
        cmd->add_option("--spin", spin, "spin as 'n' or 'n/2'");
        cmd->add_flag("--massless", massless, "massless system (default massive)");
        cmd->add_flag("--massive", [](std::int64_t) {}, "massive system (default)");
        if (with_phases) {
            cmd->add_option("--phases", phases_mode, "zero|random phase convention");
            cmd->add_option("--phases-file", phases_file,
                            "load theta^C/theta^PT angles from a JSON file");
        }
    };

    // build
    auto* build = app.add_subcommand("build", "construct C/PT/CPT over a spin space");
    add_space_options(build, true);
    std::string build_prefix = "cptkit";
    build->add_option("--prefix", build_prefix, "output file prefix");

    // verify <suite>
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "klein|lemma1|unitary-consistency|antiunitary-demo|momentum|dfs")
        ->required();
    add_space_options(verify, true);
    unsigned samples = 20;
    verify->add_option("--samples", samples, "time samples (unitary-consistency)");
    double demo_t = 0.78539816339744830962;
    verify->add_option("--t", demo_t, "evolution time (antiunitary-demo)");
    std::size_t grid_points = 32;
    double grid_pmax = 4.0;
    unsigned packets = 100;
    verify->add_option("--points", grid_points, "grid points (momentum)");
    verify->add_option("--pmax", grid_pmax, "grid extent (momentum)");
    verify->add_option("--packets", packets, "random wavepackets (momentum)");
    std::string sector = "+";
    std::string noise_name = "twirl";
    double noise_p = 0.1;
    unsigned trials = 100;
    verify->add_option("--sector", sector, "+|- code sector (dfs)");
    verify->add_option("--noise", noise_name, "twirl|dephase|depolarize (dfs)");
    verify->add_option("--noise-p", noise_p, "depolarizing strength (dfs)");
    verify->add_option("--trials", trials, "random messages / MC trials");

    // sweep align
    auto* sweep = app.add_subcommand("sweep", "alignment-protocol sweeps");
    std::string sweep_kind;
    sweep->add_option("kind", sweep_kind, "align")->required();
    std::string q0_grid = "0.6,0.75,0.9";
    std::string n_grid = "1:8";
    unsigned sweep_trials = 10000;
    sweep->add_option("--q0-grid", q0_grid, "comma-separated q0 values");
    sweep->add_option("--N-grid", n_grid, "copy counts, e.g. 1:8 or 1,2,4");
    sweep->add_option("--trials", sweep_trials, "Monte-Carlo trials per cell");

    // encode / decode
    auto* encode_cmd = app.add_subcommand("encode", "encode a message into a DFS");
    add_space_options(encode_cmd, false);
    std::string message = "random";
    encode_cmd->add_option("--sector", sector, "+|- code sector");
    encode_cmd->add_option("--message", message, "'random' or comma list (re or re:im)");

    auto* decode_cmd = app.add_subcommand("decode", "decode a state against a DFS");
    add_space_options(decode_cmd, false);
    decode_cmd->add_option("--sector", sector, "+|- code sector");
    std::string state_path;
    decode_cmd->add_option("--state", state_path, "state file (dim x 1 matrix JSON)")
        ->required();

    // export
    auto* export_cmd = app.add_subcommand("export", "export matrices and manifests");
    std::string what;
    export_cmd->add_option("what", what, "gamma|space|cpt|c|pt")->required();
    add_space_options(export_cmd, true);
    bool with_embedding = false;
    export_cmd->add_flag("--embedding", with_embedding, "include embedded amplitudes");

    try {
        app.parse(argc, argv);

        if (const char* cap = std::getenv("CPTKIT_CAP"))
            set_tensor_dim_cap(std::stoull(cap));

        const int two_s = parse_spin_token(spin);
        const bool massive = !massless;
        const bool random_phases = phases_mode == "random";
        if (phases_mode != "zero" && phases_mode != "random")
            throw UsageError("--phases must be zero or random");
        const int sector_sign = sector == "-" ? -1 : +1;

        auto resolve_phases = [&](const SpinSpace& space) {
            if (!phases_file.empty())
                return phases_from_json(read_text_file(phases_file));
            if (random_phases) {
                Rng rng(derive_seed(global.seed, "klein-phases"));
                return PhaseConvention::random_admissible(space, rng);
            }
            return PhaseConvention::zero();
        };

        if (*build) {
            const SpinSpace space =
                massive ? massive_spin_s_space(two_s) : massless_allowed_states(two_s);
            const PhaseConvention conv = resolve_phases(space);
            write_text_file(build_prefix + "_phases.json", phases_to_json(conv));
            write_text_file(build_prefix + "_space.json", space_to_json(space));
            write_text_file(build_prefix + "_c.json",
                            matrix_to_json(build_C(space, conv)));
            write_text_file(build_prefix + "_pt.json",
                            matrix_to_json(build_PT(space, conv)));
            write_text_file(build_prefix + "_cpt.json",
                            matrix_to_json(build_CPT(space, conv)));
            std::cout << (massive ? "massive" : "massless") << " 2s=" << two_s
                      << " dim " << space.dim() << "\n";
            return 0;
        }

        if (*verify) {
            Report report;
            if (suite == "klein") {
                report = suite_klein(two_s, massive, random_phases, global.seed,
                                     global.tol);
            } else if (suite == "lemma1") {
                report = suite_lemma1(two_s);
            } else if (suite == "unitary-consistency") {
                report = suite_unitary_consistency(two_s, massive, samples,
                                                   global.seed);
            } else if (suite == "antiunitary-demo") {
                report = suite_antiunitary_demo(demo_t);
            } else if (suite == "momentum") {
                report = suite_momentum(two_s, massive, grid_points, grid_pmax,
                                        packets, random_phases, global.seed,
                                        global.tol);
            } else if (suite == "dfs") {
                DfsNoise noise = DfsNoise::Twirl;
                if (noise_name == "dephase")
                    noise = DfsNoise::Dephase;
                else if (noise_name == "depolarize")
                    noise = DfsNoise::Depolarize;
                else if (noise_name != "twirl")
                    throw UsageError("--noise must be twirl, dephase or depolarize");
                report = suite_dfs(two_s, massive, sector_sign, noise, noise_p,
                                   trials, global.seed, global.tol);
            } else {
                throw UsageError("unknown suite '" + suite + "'");
            }
            return emit_report(std::move(report), global);
        }

        if (*sweep) {
            if (sweep_kind != "align")
                throw UsageError("unknown sweep '" + sweep_kind + "'");
            const auto rows = alignment_sweep(parse_double_list(q0_grid),
                                              parse_unsigned_list(n_grid),
                                              sweep_trials, global.seed);
            const std::string format = global.format.empty() ? "csv" : global.format;
            std::string text;
            if (format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& r : rows) {
                    nlohmann::ordered_json row;
                    row["q0"] = r.q0;
                    row["N"] = r.copies;
                    if (r.rate.infinite)
                        row["alignment_rate"] = "inf";
                    else
                        row["alignment_rate"] = r.rate.bits;
                    row["closed_form_error"] = r.closed_form_error;
                    row["empirical_error"] = r.empirical_error;
                    row["stderr"] = r.stderr_;
                    j.push_back(std::move(row));
                }
                text = j.dump(2) + "\n";
            } else if (format == "csv") {
                text = sweep_csv(rows);
            } else {
                throw UsageError("--format must be json or csv");
            }
            if (!global.out.empty())
                write_text_file(global.out, text);
            else
                std::cout << text;
            return 0;
        }

        if (*encode_cmd || *decode_cmd) {
            const SpinSpace space =
                massive ? massive_spin_s_space(two_s) : massless_allowed_states(two_s);
            const ComplexMatrix cpt = build_CPT(space, PhaseConvention::zero());
            const DfsCode code = build_code(space, cpt, sector_sign);
            if (*encode_cmd) {
                const auto m = parse_message(message, code.logical_dim, global.seed);
                const StateVector psi = encode(m, code);
                ComplexMatrix column(psi.dim(), 1);
                for (std::size_t i = 0; i < psi.dim(); ++i)
                    column(i, 0) = psi[i];
                const std::string text = matrix_to_json(column);
                if (!global.out.empty())
                    write_text_file(global.out, text);
                else
                    std::cout << text;
                std::cerr << "encoded " << code.logical_dim
                          << "-dim message into sector " << sector << " (dim "
                          << space.dim() << ")\n";
                return 0;
            }
            std::ifstream in(state_path, std::ios::binary);
            if (!in)
                throw LookupError("cannot read state file: " + state_path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            const ComplexMatrix column = matrix_from_json(buffer.str());
            if (column.cols() != 1 || column.rows() != space.dim())
                throw ShapeError("state file does not match the space dimension");
            StateVector psi(space.dim());
            for (std::size_t i = 0; i < psi.dim(); ++i)
                psi[i] = column(i, 0);
            const DecodeResult result = decode(psi, code);
            std::ostringstream os;
            os.precision(17);
            os << "{\n  \"message\": [";
            for (std::size_t i = 0; i < result.message.size(); ++i) {
                if (i)
                    os << ", ";
                os << "[" << result.message[i].real() << ", "
                   << result.message[i].imag() << "]";
            }
            os << "],\n  \"residual\": " << result.residual << "\n}\n";
            if (!global.out.empty())
                write_text_file(global.out, os.str());
            else
                std::cout << os.str();
            return 0;
        }

        if (*export_cmd) {
            const SpinSpace space =
                massive ? massive_spin_s_space(two_s) : massless_allowed_states(two_s);
            const PhaseConvention conv = resolve_phases(space);
            std::string text;
            if (what == "gamma") {
                const auto g = gamma_matrices();
                text = matrix_to_json(g.g0) + matrix_to_json(g.g1) +
                       matrix_to_json(g.g2) + matrix_to_json(g.g3) +
                       matrix_to_json(g.g5);
            } else if (what == "space") {
                text = space_to_json(space, with_embedding);
            } else if (what == "cpt") {
                text = matrix_to_json(build_CPT(space, conv));
            } else if (what == "c") {
                text = matrix_to_json(build_C(space, conv));
            } else if (what == "pt") {
                text = matrix_to_json(build_PT(space, conv));
            } else {
                throw UsageError("unknown export '" + what + "'");
            }
            if (!global.out.empty())
                write_text_file(global.out, text);
            else
                std::cout << text;
            return 0;
        }

        throw UsageError("no command given");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pmonoid/json_io.hpp"
#include "pmonoid/pmonoid.hpp"
#include "verify.hpp"

namespace pmonoid::cli {

namespace {

using io::json;

/// Unreadable input; carries the file name and position for diagnostics.
struct InputError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError{path + ": cannot open file"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("]"); pos != std::string::npos) what = what.substr(pos + 2);
        throw InputError{path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what};
    }
}

// Decodes a document, turning schema mismatches into input errors.
template <typename F>
auto decode(const std::string& path, F&& f) {
    json doc = load(path);
    try {
        return f(doc);
    } catch (const FormatError& e) {
        throw InputError{path + ": " + e.what()};
    } catch (const json::exception& e) {
        throw InputError{path + ": " + e.what()};
    }
}

MSeq load_sequence(const std::string& path) {
    return decode(path, [](const json& j) { return io::sequence_from_json(j); });
}

struct Options {
    std::vector<std::string> files;
    std::uint64_t seed = 20240601;
    bool compact = false;
    bool projective = false;
    bool bar = false;
    std::size_t k = 1;
};

void emit(std::ostream& out, const json& j, bool compact) { out << (compact ? j.dump() : j.dump(2)) << '\n'; }

int verify(const Options& opt, std::ostream& out) {
    const auto results = verify_examples(opt.seed);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    if (opt.compact) {
        json report = {{"format", io::kFormatVersion}, {"kind", "verify"}, {"passed", passed},
                       {"total", results.size()}, {"results", json::array()}};
        for (const auto& r : results) {
            report["results"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << report.dump() << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) out << "  (" << r.detail << ')';
            out << '\n';
        }
        out << passed << '/' << results.size() << " examples passed\n";
    }
    return passed == results.size() ? kOk : kExamplesFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the compactified projective linear monoid"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, std::size_t inputs, const char* what) {
        sub->add_option("files", opt.files, what)->required()->expected(static_cast<int>(inputs));
        sub->add_flag("--json", opt.compact, "Compact single-line JSON output");
    };

    auto* normalize = app.add_subcommand("normalize", "Reduce a sequence to its kernel-chain form");
    add_common(normalize, 1, "Sequence JSON");
    normalize->add_flag("--projective", opt.projective, "Emit the projective class");

    auto* mul_cmd = app.add_subcommand("mul", "Product of projective sequences, left to right");
    mul_cmd->add_option("files", opt.files, "Sequence JSON files")->required()->expected(2, 64);
    mul_cmd->add_flag("--json", opt.compact, "Compact single-line JSON output");

    auto* act = app.add_subcommand("act", "Apply a sequence to projective points");
    add_common(act, 2, "Sequence JSON, then a points JSON list");

    auto* limit_cmd = app.add_subcommand("limit", "Limit of a polynomial family as ε -> 0");
    add_common(limit_cmd, 1, "Family JSON");

    auto* hinge_cmd = app.add_subcommand("hinge", "Hinge of a sequence in M_H");
    add_common(hinge_cmd, 1, "Sequence JSON");

    auto* hinge_inv = app.add_subcommand("hinge-inv", "Sequence in M_H realizing a hinge");
    add_common(hinge_inv, 1, "Hinge JSON");

    auto* wedge = app.add_subcommand("wedge", "Degree-k wedge power of a sequence");
    add_common(wedge, 1, "Sequence JSON");
    wedge->add_option("--k", opt.k, "Degree")->required();

    auto* lambda_cmd = app.add_subcommand("lambda", "All wedge powers of a sequence");
    add_common(lambda_cmd, 1, "Sequence JSON");
    lambda_cmd->add_flag("--bar", opt.bar, "Projectivized degrees 1..n-1 (requires M_H)");

    auto* det = app.add_subcommand("det", "Top wedge power scalar");
    add_common(det, 1, "Sequence JSON");

    auto* verify_cmd = app.add_subcommand("verify-examples", "Check the built-in worked examples");
    verify_cmd->add_option("--seed", opt.seed, "Seed for sampled points");
    verify_cmd->add_flag("--json", opt.compact, "Machine-readable report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*verify_cmd) return verify(opt, out);
        if (*normalize) {
            MSeq a = load_sequence(opt.files[0]);
            emit(out, opt.projective ? io::to_json(projectivize(a)) : io::to_json(a), opt.compact);
        } else if (*mul_cmd) {
            PMSeq acc = projectivize(load_sequence(opt.files[0]));
            for (std::size_t f = 1; f < opt.files.size(); ++f) acc = mul(acc, projectivize(load_sequence(opt.files[f])));
            emit(out, io::to_json(acc), opt.compact);
        } else if (*act) {
            PMSeq a = projectivize(load_sequence(opt.files[0]));
            auto points = decode(opt.files[1], [](const json& j) { return io::points_from_json(j); });
            json result = json::array();
            for (const auto& x : points) result.push_back(io::to_json(phi_apply(a, x)));
            emit(out, result, opt.compact);
        } else if (*limit_cmd) {
            EpsFamily f = decode(opt.files[0], [](const json& j) { return io::family_from_json(j); });
            emit(out, io::to_json(limit(f)), opt.compact);
        } else if (*hinge_cmd) {
            emit(out, io::to_json(varphi(load_sequence(opt.files[0]))), opt.compact);
        } else if (*hinge_inv) {
            Hinge h = decode(opt.files[0], [](const json& j) { return io::hinge_from_json(j); });
            emit(out, io::to_json(hinge_to_MH(h)), opt.compact);
        } else if (*wedge) {
            emit(out, io::to_json(wedge_seq(load_sequence(opt.files[0]), opt.k)), opt.compact);
        } else if (*lambda_cmd) {
            MSeq a = load_sequence(opt.files[0]);
            emit(out, io::to_json(opt.bar ? lambda_bar(projectivize(a)) : lambda(a)), opt.compact);
        } else if (*det) {
            json result = {{"format", io::kFormatVersion}, {"kind", "det"},
                           {"det", io::to_json(det_seq(load_sequence(opt.files[0])))}};
            emit(out, result, opt.compact);
        }
    } catch (const InputError& e) {
        err << "parse error: " << e.message << '\n';
        return kParseError;
    } catch (const Error& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace pmonoid::cli

// bpsdt: command-line front end for the BPS / quiver DT toolkit.
//
// Exit codes: 0 success, 1 input error, 2 internal consistency failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "bpsdt/bpsdt.hpp"
#include "bpsdt/io.hpp"

namespace {

using namespace bpsdt;
using io::Format;

struct Common {
    Format format = Format::structured;
    std::string output;
};

void add_common(CLI::App* cmd, Common& common) {
    const std::map<std::string, Format> formats{{"structured", Format::structured}, {"csv", Format::csv}};
    cmd->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--output", common.output, "Write to PATH instead of standard output");
}

void write(const Common& common, const std::string& text) {
    if (common.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out) detail::fail_input("cannot write " + common.output);
    out << text;
}

template <class T>
T expect(const io::SeriesData& data, io::SeriesKind kind, const std::string& path) {
    if (io::series_kind(data) != kind) {
        detail::fail_input(path + ": expected kind " + io::to_string(kind) + ", got " +
                           io::to_string(io::series_kind(data)));
    }
    return std::get<T>(data);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact BPS state counts, loop-quiver DT invariants, and the local/relative correspondence"};
    app.require_subcommand(1);

    Common common;

    std::uint32_t loops = 0;
    std::uint32_t upto = 0;
    auto* dt = app.add_subcommand("dt", "Table of DT_n^(m) for 0 <= m <= LOOPS, 1 <= n <= UPTO");
    dt->add_option("--loops", loops, "Largest loop count m")->required();
    dt->add_option("--upto", upto, "Largest n")->required()->check(CLI::PositiveNumber);
    add_common(dt, common);

    std::string input;
    bool inverse = false;
    auto* local = app.add_subcommand("local-bps", "Local GW -> local BPS (--inverse: BPS -> GW)");
    local->add_option("--input", input, "Series file")->required();
    local->add_flag("--inverse", inverse);
    add_common(local, common);

    auto* relative = app.add_subcommand("relative-bps", "Relative GW -> relative BPS (--inverse: BPS -> GW)");
    relative->add_option("--input", input, "Series file")->required();
    relative->add_flag("--inverse", inverse);
    add_common(relative, common);

    std::uint32_t w = 0;
    auto* matrix = app.add_subcommand("matrix", "Correspondence matrix C (or its inverse)");
    matrix->add_option("--w", w, "Tangency w")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--upto", upto, "Dimension N")->required()->check(CLI::PositiveNumber);
    matrix->add_flag("--inverse", inverse);
    add_common(matrix, common);

    std::string direction;
    auto* transform = app.add_subcommand("transform", "Local <-> relative BPS via C");
    transform->add_option("--input", input, "Series file")->required();
    transform->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"local-to-relative", "relative-to-local"}));
    add_common(transform, common);

    std::size_t order = 0;
    auto* pipeline = app.add_subcommand("pipeline", "Local GW -> local BPS -> relative BPS -> relative GW");
    pipeline->add_option("--input", input, "local_gw series file")->required();
    pipeline->add_option("--upto", order, "Use only the first N entries");
    add_common(pipeline, common);

    auto* check = app.add_subcommand("check-integrality", "Report non-integral BPS entries");
    check->add_option("--input", input, "BPS series file")->required();
    add_common(check, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dt->parsed()) {
            write(common, io::emit(dt_table(loops, upto), common.format));
        } else if (local->parsed()) {
            const auto data = io::read_series_file(input);
            if (inverse) {
                write(common, io::emit(local_gw_from_bps(expect<BpsVector>(data, io::SeriesKind::local_bps, input)),
                                       common.format));
            } else {
                write(common, io::emit(local_bps_from_gw(expect<GwVector>(data, io::SeriesKind::local_gw, input)),
                                       common.format));
            }
        } else if (relative->parsed()) {
            const auto data = io::read_series_file(input);
            if (inverse) {
                write(common, io::emit(relative_gw_from_bps(expect<BpsVector>(data, io::SeriesKind::relative_bps, input)),
                                       common.format));
            } else {
                write(common, io::emit(relative_bps_from_gw(expect<GwVector>(data, io::SeriesKind::relative_gw, input)),
                                       common.format));
            }
        } else if (matrix->parsed()) {
            const auto c = build_matrix(w, upto);
            const IntMatrix m = inverse ? invert_unit_lower_triangular(c) : c.entries;
            const std::string text = common.format == Format::csv ? io::emit_table(io::to_table(m), Format::csv)
                                                                  : io::to_json(m, w, inverse).dump(2) + "\n";
            write(common, text);
        } else if (transform->parsed()) {
            const auto data = io::read_series_file(input);
            if (direction == "local-to-relative") {
                write(common, io::emit(local_to_relative_bps(expect<BpsVector>(data, io::SeriesKind::local_bps, input)),
                                       common.format));
            } else {
                write(common, io::emit(relative_to_local_bps(expect<BpsVector>(data, io::SeriesKind::relative_bps, input)),
                                       common.format));
            }
        } else if (pipeline->parsed()) {
            const auto data = io::read_series_file(input);
            write(common, io::emit(run_pipeline(expect<GwVector>(data, io::SeriesKind::local_gw, input), order),
                                   common.format));
        } else if (check->parsed()) {
            const auto data = io::read_series_file(input);
            if (!std::holds_alternative<BpsVector>(data)) {
                detail::fail_input(input + ": check-integrality expects local_bps or relative_bps");
            }
            write(common, io::emit(integrality_report(std::get<BpsVector>(data)), common.format));
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

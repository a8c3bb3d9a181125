#pragma once

#include <cstddef>
#include <string>

#include "bpsdt/bps.hpp"
#include "bpsdt/correspondence.hpp"
#include "bpsdt/errors.hpp"

namespace bpsdt {

/// Every stage of local GW -> local BPS -> relative BPS -> relative GW.
struct PipelineReport {
    GeometryParams geometry;
    GwVector local_gw;
    BpsVector local_bps;
    BpsVector relative_bps;
    GwVector relative_gw;
    IntegralityReport local_integrality;
    IntegralityReport relative_integrality;
};

namespace detail {

template <class F>
auto run_stage(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("stage ") + stage + ": " + e.what());
    } catch (const ConsistencyError& e) {
        throw ConsistencyError(std::string("stage ") + stage + ": " + e.what());
    }
}

} // namespace detail

/// `order` = 0 uses every input entry.
inline PipelineReport run_pipeline(const GwVector& local_gw, std::size_t order = 0) {
    if (local_gw.kind != Kind::local) detail::fail_input("pipeline: input must be local Gromov-Witten data");
    GwVector input = local_gw;
    if (order != 0) {
        if (order > input.entries.size()) {
            detail::fail_input("pipeline: requested " + std::to_string(order) + " entries, input has " +
                               std::to_string(input.entries.size()));
        }
        input.entries.resize(order);
    }

    PipelineReport r;
    r.geometry = input.geometry;
    r.local_gw = input;
    r.local_bps = detail::run_stage("local_bps_from_gw", [&] { return local_bps_from_gw(input); });
    r.relative_bps = detail::run_stage("local_to_relative_bps", [&] { return local_to_relative_bps(r.local_bps); });
    r.relative_gw = detail::run_stage("relative_gw_from_bps", [&] { return relative_gw_from_bps(r.relative_bps); });
    r.local_integrality = integrality_report(r.local_bps);
    r.relative_integrality = integrality_report(r.relative_bps);
    return r;
}

} // namespace bpsdt

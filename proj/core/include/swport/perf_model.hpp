#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swport/errors.hpp"
#include "swport/scalar_align.hpp"

namespace swport::perfmodel {

// One homogeneous group of execution units.  throughput is the number of
// model instructions retired per cycle per lane (fractional values allowed:
// mixed-rate devices store their count-weighted equivalent, see
// equivalent_throughput).
struct CoreGroup {
    double clock_mhz = 0.0;
    double throughput = 1.0;
    std::size_t lanes = 1;
    std::size_t cores = 1;
};

enum class DeviceKind { DiscreteGpu, IntegratedGpu, Cpu };

const char* device_kind_name(DeviceKind k);
DeviceKind parse_device_kind(const std::string& name);

// A device as the capability model sees it.  Hybrid parts (e.g. P-core +
// E-core CPUs) carry one CoreGroup per cluster; their peaks add up.
struct DeviceSpec {
    std::string vendor;
    std::string model;
    DeviceKind kind = DeviceKind::Cpu;
    std::string segment;  // desktop / server / mobile
    std::vector<CoreGroup> groups;
    std::string note;  // provenance of any non-obvious field value
};

// Integer operations per second one group can retire:
// clock * throughput * lanes * cores.
double capability(const CoreGroup& group);

// Sum of group capabilities in ops/s.
double capability(const DeviceSpec& device);

// Capability divided by the cost of one cell update, in billions of cell
// updates per second (GCUPS).  This is the ceiling any kernel implementation
// can reach on the device.
double theoretical_peak_gcups(const DeviceSpec& device,
                              unsigned instructions_per_cell =
                                  align::kInstructionsPerCellUpdate);

// Count-weighted mean throughput for an instruction stream whose classes
// retire at different rates: sum(count*rate) / sum(count).
struct InstructionMix {
    struct Class {
        unsigned count = 0;
        double throughput = 1.0;
    };
    std::vector<Class> classes;
};
double equivalent_throughput(const InstructionMix& mix);

// Measured rate of a finished run: |query| * |database| cells over `seconds`
// of wall time, in GCUPS.  Throws NonPositiveTime on seconds <= 0.
double measured_gcups(std::uint64_t query_residues, std::uint64_t database_residues,
                      double seconds);

} // namespace swport::perfmodel

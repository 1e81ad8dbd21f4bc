#include "swport/perf_model.hpp"

namespace swport::perfmodel {

const char* device_kind_name(DeviceKind k) {
    switch (k) {
    case DeviceKind::DiscreteGpu: return "dgpu";
    case DeviceKind::IntegratedGpu: return "igpu";
    case DeviceKind::Cpu: return "cpu";
    }
    return "?";
}

DeviceKind parse_device_kind(const std::string& name) {
    if (name == "dgpu") return DeviceKind::DiscreteGpu;
    if (name == "igpu") return DeviceKind::IntegratedGpu;
    if (name == "cpu") return DeviceKind::Cpu;
    throw ParseError("unknown device kind \"" + name +
                     "\" (expected dgpu, igpu or cpu)");
}

double capability(const CoreGroup& group) {
    return group.clock_mhz * 1e6 * group.throughput *
           static_cast<double>(group.lanes) * static_cast<double>(group.cores);
}

double capability(const DeviceSpec& device) {
    double total = 0.0;
    for (const CoreGroup& g : device.groups)
        total += capability(g);
    return total;
}

double theoretical_peak_gcups(const DeviceSpec& device, unsigned instructions_per_cell) {
    if (instructions_per_cell == 0)
        throw ParseError("instructions_per_cell must be positive");
    return capability(device) / static_cast<double>(instructions_per_cell) / 1e9;
}

double equivalent_throughput(const InstructionMix& mix) {
    double ops = 0.0, weighted = 0.0;
    for (const auto& c : mix.classes) {
        ops += c.count;
        weighted += c.count * c.throughput;
    }
    if (ops == 0.0)
        throw ParseError("instruction mix is empty");
    return weighted / ops;
}

double measured_gcups(std::uint64_t query_residues, std::uint64_t database_residues,
                      double seconds) {
    if (seconds <= 0.0)
        throw NonPositiveTime("elapsed time must be positive, got " +
                              std::to_string(seconds));
    return static_cast<double>(query_residues) * static_cast<double>(database_residues) /
           (seconds * 1e9);
}

} // namespace swport::perfmodel

#pragma once

#include <iosfwd>
#include <span>

#include "swport/perf_model.hpp"

namespace swport::perfmodel {

// Registry file format: one device per line,
//
//   vendor | model | kind | segment | groups | note
//
// where kind is dgpu/igpu/cpu and groups is one or more
// cores:lanes:throughput:clock_mhz quadruples joined by '+'.  '#' starts a
// comment.  Fields are pipe-separated so models may contain spaces.
std::vector<DeviceSpec> parse_device_registry(std::istream& in);
void emit_device_registry(std::ostream& out, std::span<const DeviceSpec> devices);

// The registry this library ships: the 12 GPUs and 9 CPUs whose capability
// numbers the peak tests pin down.  Parsed once from an embedded copy of
// data/devices.reg.
const std::vector<DeviceSpec>& builtin_registry();
const char* builtin_registry_text();

// Case-insensitive model lookup: exact match first, then a unique substring
// match.  Returns nullptr when nothing matches and throws ParseError when the
// name is ambiguous.
const DeviceSpec* find_device(std::span<const DeviceSpec> devices,
                              const std::string& model);

} // namespace swport::perfmodel

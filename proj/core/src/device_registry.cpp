#include "swport/device_registry.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace swport::perfmodel {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string::size_type pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

CoreGroup parse_group(const std::string& text, std::size_t line_no) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 4)
        throw ParseError("line " + std::to_string(line_no) +
                         ": core group must be cores:lanes:throughput:clock_mhz, got \"" +
                         text + '"');
    CoreGroup g;
    try {
        g.cores = static_cast<std::size_t>(std::stoul(trim(parts[0])));
        g.lanes = static_cast<std::size_t>(std::stoul(trim(parts[1])));
        g.throughput = std::stod(trim(parts[2]));
        g.clock_mhz = std::stod(trim(parts[3]));
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed core group \"" + text + '"');
    }
    if (g.cores == 0 || g.lanes == 0 || g.throughput <= 0.0 || g.clock_mhz <= 0.0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": core group fields must be positive");
    return g;
}

} // namespace

std::vector<DeviceSpec> parse_device_registry(std::istream& in) {
    std::vector<DeviceSpec> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        std::vector<std::string> fields = split(line, '|');
        if (fields.size() != 5 && fields.size() != 6)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected vendor|model|kind|segment|groups[|note]");
        DeviceSpec d;
        d.vendor = trim(fields[0]);
        d.model = trim(fields[1]);
        d.kind = parse_device_kind(trim(fields[2]));
        d.segment = trim(fields[3]);
        for (const std::string& g : split(trim(fields[4]), '+'))
            d.groups.push_back(parse_group(trim(g), line_no));
        if (fields.size() == 6)
            d.note = trim(fields[5]);
        if (d.vendor.empty() || d.model.empty())
            throw ParseError("line " + std::to_string(line_no) +
                             ": vendor and model must be non-empty");
        if (d.groups.empty())
            throw ParseError("line " + std::to_string(line_no) +
                             ": device needs at least one core group");
        out.push_back(std::move(d));
    }
    return out;
}

void emit_device_registry(std::ostream& out, std::span<const DeviceSpec> devices) {
    out << "# vendor | model | kind | segment | groups "
           "(cores:lanes:throughput:clock_mhz) | note\n";
    for (const DeviceSpec& d : devices) {
        out << d.vendor << " | " << d.model << " | " << device_kind_name(d.kind)
            << " | " << d.segment << " | ";
        for (std::size_t i = 0; i < d.groups.size(); ++i) {
            const CoreGroup& g = d.groups[i];
            if (i)
                out << " + ";
            std::ostringstream group;
            group << g.cores << ':' << g.lanes << ':' << g.throughput << ':'
                  << g.clock_mhz;
            out << group.str();
        }
        out << " | " << d.note << '\n';
    }
}

const char* builtin_registry_text() {
    // Keep in sync with data/devices.reg (a test checks they parse equal).
    return R"(# swport device registry
# vendor | model | kind | segment | groups (cores:lanes:throughput:clock_mhz) | note
NVIDIA | GTX 980    | dgpu | desktop | 16:32:3:1216 | add/sub 4 per cycle, max 2; 12-op mix averages 32/11, tabulated as 3
NVIDIA | GTX 1080   | dgpu | desktop | 20:32:3:1733 | add/sub 4 per cycle, max 2; 12-op mix averages 32/11, tabulated as 3
NVIDIA | RTX 2070   | dgpu | desktop | 36:32:2:1620 |
NVIDIA | V100       | dgpu | server  | 80:32:2:1380 |
NVIDIA | RTX 3070   | dgpu | desktop | 46:32:2:1725 |
NVIDIA | RTX 3090   | dgpu | desktop | 82:32:2:1695 |
Intel  | Arc A770   | dgpu | desktop | 32:16:8:2400 |
Intel  | UHD 630    | igpu | desktop | 3:8:8:1200   |
Intel  | UHD 770    | igpu | desktop | 4:8:8:1650   |
Intel  | Xe-LPG 128EU | igpu | mobile | 8:16:8:2250 |
AMD    | RX 6700 XT | dgpu | desktop | 40:32:2:2581 |
AMD    | RX Vega 6  | igpu | mobile  | 6:32:2:1100  |
Intel  | Core i5-7400      | cpu | desktop | 4:8:1:3300  |
Intel  | Core i5-10400F    | cpu | desktop | 6:8:1:4000  |
Intel  | Xeon E5-1620 v3   | cpu | server  | 4:8:1:3500  |
Intel  | Xeon E5-2695 v3   | cpu | server  | 28:8:1:1900 | dual socket, 2 x 14 cores
Intel  | Xeon Gold 6138    | cpu | server  | 40:16:1:1900 | dual socket, 2 x 20 cores; 16 lanes from 512-bit vectors
Intel  | Core i9-9900K     | cpu | desktop | 8:8:1:4700  |
Intel  | Core i9-13900K    | cpu | desktop | 8:8:1:5500 + 16:8:1:4300 | hybrid, 8 P-cores + 16 E-cores
Intel  | Core Ultra 9 185H | cpu | mobile  | 6:8:1:5100 + 8:8:1:3800 + 2:8:1:2500 | hybrid, 6 P + 8 E + 2 LP-E cores
AMD    | Ryzen 3 5300U     | cpu | mobile  | 4:8:1:3600  |
)";
}

const std::vector<DeviceSpec>& builtin_registry() {
    static const std::vector<DeviceSpec> registry = [] {
        std::istringstream in(builtin_registry_text());
        return parse_device_registry(in);
    }();
    return registry;
}

const DeviceSpec* find_device(std::span<const DeviceSpec> devices,
                              const std::string& model) {
    const std::string needle = lower(model);
    for (const DeviceSpec& d : devices)
        if (lower(d.model) == needle)
            return &d;
    const DeviceSpec* found = nullptr;
    std::vector<std::string> matches;
    for (const DeviceSpec& d : devices) {
        if (lower(d.model).find(needle) != std::string::npos) {
            found = &d;
            matches.push_back(d.model);
        }
    }
    if (matches.size() > 1) {
        std::string list;
        for (const std::string& m : matches)
            list += (list.empty() ? "" : ", ") + m;
        throw ParseError("device name \"" + model + "\" is ambiguous: " + list);
    }
    return found;
}

} // namespace swport::perfmodel

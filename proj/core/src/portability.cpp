#include "swport/portability.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace swport::portability {

double arch_efficiency(const EfficiencyRecord& record) {
    if (record.peak_gcups <= 0.0)
        throw ZeroPeak("platform \"" + record.platform +
                       "\" has non-positive peak " + std::to_string(record.peak_gcups));
    return record.achieved_gcups / record.peak_gcups;
}

std::vector<std::string> efficiency_warnings(std::span<const EfficiencyRecord> records) {
    std::vector<std::string> out;
    for (const EfficiencyRecord& r : records) {
        if (!r.supported || r.peak_gcups <= 0.0)
            continue;
        if (r.achieved_gcups / r.peak_gcups > 1.05) {
            std::ostringstream msg;
            msg << r.platform << '/' << r.app << '/' << r.implementation
                << ": achieved " << r.achieved_gcups << " GCUPS exceeds peak "
                << r.peak_gcups << " by more than 5%; check the measurement";
            out.push_back(msg.str());
        }
    }
    return out;
}

std::vector<EfficiencyRecord> filter_records(std::span<const EfficiencyRecord> records,
                                             const std::string& app,
                                             const std::string& implementation) {
    std::vector<EfficiencyRecord> out;
    for (const EfficiencyRecord& r : records)
        if (r.app == app && r.implementation == implementation)
            out.push_back(r);
    return out;
}

std::optional<double> pp_bar(std::span<const EfficiencyRecord> records,
                             const PlatformSet& set) {
    if (set.platforms.empty())
        throw NoRecords("platform set \"" + set.name + "\" is empty");
    double sum = 0.0;
    for (const std::string& platform : set.platforms) {
        const EfficiencyRecord* found = nullptr;
        for (const EfficiencyRecord& r : records) {
            if (r.platform == platform) {
                found = &r;
                break;
            }
        }
        if (!found)
            throw MissingRecord("no record for platform \"" + platform +
                                "\" in set \"" + set.name + '"');
        if (!found->supported)
            return std::nullopt;  // NA: the implementation does not run here
        sum += arch_efficiency(*found);
    }
    return sum / static_cast<double>(set.platforms.size());
}

double app_efficiency(std::span<const EfficiencyRecord> platform_records,
                      double achieved_gcups) {
    if (platform_records.empty())
        throw NoRecords("no records for this platform");
    double best = 0.0;
    for (const EfficiencyRecord& r : platform_records)
        if (r.supported)
            best = std::max(best, r.achieved_gcups);
    if (best <= 0.0)
        return 0.0;
    return achieved_gcups / best;
}

namespace {

bool parse_supported(const std::string& tok, std::size_t line_no) {
    if (tok == "yes" || tok == "true" || tok == "1")
        return true;
    if (tok == "no" || tok == "false" || tok == "0")
        return false;
    throw ParseError("line " + std::to_string(line_no) +
                     ": supported must be yes/no, got \"" + tok + '"');
}

double parse_rate(const std::string& tok, std::size_t line_no) {
    if (tok == "-" || tok == "x" || tok == "na" || tok == "NA")
        return 0.0;
    try {
        return std::stod(tok);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": bad rate \"" + tok + '"');
    }
}

} // namespace

std::vector<EfficiencyRecord> parse_measurement_log(std::istream& in) {
    std::vector<EfficiencyRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        EfficiencyRecord r;
        std::string achieved, peak, supported;
        if (!(row >> r.platform))
            continue;  // blank line
        if (!(row >> r.app >> r.implementation >> achieved >> peak >> supported))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 6 columns "
                             "(platform app implementation achieved peak supported)");
        std::string extra;
        if (row >> extra)
            throw ParseError("line " + std::to_string(line_no) +
                             ": unexpected trailing column \"" + extra + '"');
        r.achieved_gcups = parse_rate(achieved, line_no);
        r.peak_gcups = parse_rate(peak, line_no);
        r.supported = parse_supported(supported, line_no);
        out.push_back(std::move(r));
    }
    return out;
}

void emit_measurement_log(std::ostream& out, std::span<const EfficiencyRecord> records) {
    out << "# platform app implementation achieved_gcups peak_gcups supported\n";
    for (const EfficiencyRecord& r : records) {
        out << r.platform << ' ' << r.app << ' ' << r.implementation << ' ';
        if (r.supported)
            out << r.achieved_gcups;
        else
            out << '-';
        out << ' ' << r.peak_gcups << ' ' << (r.supported ? "yes" : "no") << '\n';
    }
}

namespace {

std::string fixed1(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << v;
    return s.str();
}

void pad_to(std::string& s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
}

} // namespace

std::string render_efficiency_table(std::span<const EfficiencyRecord> records,
                                    std::span<const std::string> implementations) {
    // Platforms in first-seen order.
    std::vector<std::string> platforms;
    std::map<std::string, double> peaks;
    for (const EfficiencyRecord& r : records) {
        if (!peaks.count(r.platform)) {
            platforms.push_back(r.platform);
            peaks[r.platform] = r.peak_gcups;
        }
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"platform", "peak"};
    for (const std::string& impl : implementations) {
        head.push_back(impl);
        head.push_back("eff%");
    }
    rows.push_back(head);

    for (const std::string& p : platforms) {
        std::vector<std::string> row{p, fixed1(peaks[p])};
        for (const std::string& impl : implementations) {
            const EfficiencyRecord* found = nullptr;
            for (const EfficiencyRecord& r : records)
                if (r.platform == p && r.implementation == impl) {
                    found = &r;
                    break;
                }
            if (!found) {
                row.push_back("-");
                row.push_back("-");
            } else if (!found->supported) {
                row.push_back("x");
                row.push_back("x");
            } else {
                row.push_back(fixed1(found->achieved_gcups));
                row.push_back(fixed1(arch_efficiency(*found) * 100.0));
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            pad_to(cell, widths[c] + (c + 1 < row.size() ? 2 : 0));
            line += cell;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string render_pp_table(std::span<const PpEntry> entries) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"set", "implementation", "pp%"});
    for (const PpEntry& e : entries)
        rows.push_back({e.set_name, e.implementation,
                        e.value ? fixed1(*e.value * 100.0) : std::string("NA")});

    std::vector<std::size_t> widths(3, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 3; ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < 3; ++c) {
            std::string cell = row[c];
            pad_to(cell, widths[c] + (c < 2 ? 2 : 0));
            line += cell;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

} // namespace swport::portability

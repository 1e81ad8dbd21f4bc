#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swport/errors.hpp"

namespace swport::portability {

// One measurement: an application built with one implementation, run on one
// platform.  Unsupported combinations keep achieved_gcups at 0 and set
// supported = false; they are what forces a portability score to NA.
struct EfficiencyRecord {
    std::string platform;
    std::string app;
    std::string implementation;
    double achieved_gcups = 0.0;
    double peak_gcups = 0.0;
    bool supported = true;
};

struct PlatformSet {
    std::string name;
    std::vector<std::string> platforms;
};

// achieved / peak.  Throws ZeroPeak when peak_gcups <= 0.
double arch_efficiency(const EfficiencyRecord& record);

// Records whose achieved rate exceeds peak by more than 5% are almost
// certainly mis-measured; cells are never updated faster than the model peak.
std::vector<std::string> efficiency_warnings(std::span<const EfficiencyRecord> records);

// Records for one (app, implementation) pair, in input order.
std::vector<EfficiencyRecord> filter_records(std::span<const EfficiencyRecord> records,
                                             const std::string& app,
                                             const std::string& implementation);

// Performance portability over a platform set: the arithmetic mean of
// architectural efficiencies when the implementation runs everywhere in the
// set, and NA (nullopt) as soon as one platform is unsupported.  `records`
// should already be filtered to one (app, implementation); the first record
// per platform wins.  Throws MissingRecord when a platform has no record at
// all and NoRecords when the set is empty.
std::optional<double> pp_bar(std::span<const EfficiencyRecord> records,
                             const PlatformSet& set);

// Application efficiency: achieved relative to the best supported
// implementation on the same platform.  `platform_records` are that
// platform's records across implementations; returns 0 when nothing on the
// platform achieved a positive rate.  Throws NoRecords on an empty span.
double app_efficiency(std::span<const EfficiencyRecord> platform_records,
                      double achieved_gcups);

// Measurement log: whitespace-delimited columns
//
//   platform  app  implementation  achieved_gcups  peak_gcups  supported
//
// with '#' comments.  achieved_gcups accepts '-' or 'x' (meaning "no rate",
// stored as 0) and supported accepts yes/no/true/false/1/0.
std::vector<EfficiencyRecord> parse_measurement_log(std::istream& in);
void emit_measurement_log(std::ostream& out, std::span<const EfficiencyRecord> records);

// Human-readable efficiency table for one app: one row per platform, one
// achieved/efficiency column pair per implementation ('x' marks unsupported
// combinations).  Efficiencies are exact internally and rounded to one
// decimal here, at the presentation edge.
std::string render_efficiency_table(std::span<const EfficiencyRecord> records,
                                    std::span<const std::string> implementations);

// Portability summary table (set name x implementation, 'NA' where defined).
struct PpEntry {
    std::string set_name;
    std::string implementation;
    std::optional<double> value;  // fraction, not percent
};
std::string render_pp_table(std::span<const PpEntry> entries);

} // namespace swport::portability

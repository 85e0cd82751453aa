#pragma once

#include <string>

#include "mls/harness.hpp"
#include "mls/model.hpp"

namespace mls {

// Instance document:
//   line 1        "mls 1"
//   line 2        "<m> <k>"
//   lines 3..k+2  space-separated positive integers, line r+2 = list r
// Single spaces, no trailing whitespace, newline-terminated lines.
std::string serialize_instance(const Instance& instance);

// Throws Error(BadMagic | BadHeader | NonIntegerToken | ListCountMismatch |
// NonPositivePtime) with 1-based line/col. parse(serialize(x)) == x.
Instance parse_instance(const std::string& text);

// FNV-1a 64 over the serialized instance document, 16 hex digits.
std::string instance_digest(const Instance& instance);

// Schedule CSV: header "step,list,job,ptime,machine,start,finish", one row
// per assignment in decision order; step is the job's arrival position in
// its list. Byte-stable for a given schedule.
std::string serialize_schedule(const Schedule& schedule);

// Inverse of serialize_schedule; loads and makespan are recomputed from the
// rows (machine indices outside [0, machines) are kept for verify_schedule
// to flag). Throws Error(BadHeader | NonIntegerToken).
Schedule parse_schedule(const std::string& text, int machines);

// Report and summary documents: JSON with a fixed key order, exact ratios as
// "p/q" strings, and a trailing newline. Byte-stable.
std::string serialize_report(const EvaluationReport& report);
std::string serialize_summary(const SweepSummary& summary);

}  // namespace mls

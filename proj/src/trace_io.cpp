#include "mls/trace_io.hpp"

#include <charconv>
#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mls {

namespace {

using ordered_json = nlohmann::ordered_json;

// Split into lines; a trailing newline does not produce an empty last line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

struct Token {
  std::string_view text;
  int col;  // 1-based
};

// Tokens separated by single spaces; empty tokens (doubled, leading or
// trailing separators) are rejected.
std::vector<Token> split_tokens(std::string_view line, int line_no, char sep) {
  std::vector<Token> tokens;
  int col = 1;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    if (end == pos)
      throw Error(Errc::NonIntegerToken, "line " + std::to_string(line_no) + ": empty token", -1,
                  line_no, col);
    tokens.push_back({line.substr(pos, end - pos), col});
    if (next == std::string_view::npos) break;
    col += static_cast<int>(end - pos) + 1;
    pos = next + 1;
  }
  return tokens;
}

std::int64_t parse_int(const Token& token, int line_no) {
  std::int64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw Error(Errc::NonIntegerToken,
                "line " + std::to_string(line_no) + " col " + std::to_string(token.col) + ": \"" +
                    std::string(token.text) + "\" is not an integer",
                -1, line_no, token.col);
  return value;
}

ordered_json algo_json(const AlgoResult& result) {
  ordered_json doc;
  doc["makespan"] = result.makespan;
  doc["ratio"] = result.ratio ? ordered_json(result.ratio->str()) : ordered_json(nullptr);
  doc["idle_total"] = result.idle_total;
  return doc;
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
  std::string out = "mls 1\n";
  out += std::to_string(instance.machines) + " " + std::to_string(instance.num_lists()) + "\n";
  for (const auto& list : instance.lists) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(list[i]);
    }
    out += '\n';
  }
  return out;
}

Instance parse_instance(const std::string& text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0] != "mls 1")
    throw Error(Errc::BadMagic, "line 1 must be \"mls 1\"", -1, 1, 1);
  if (lines.size() < 2) throw Error(Errc::BadHeader, "missing \"<m> <k>\" header line", -1, 2, 1);

  const std::vector<Token> header = split_tokens(lines[1], 2, ' ');
  if (header.size() != 2)
    throw Error(Errc::BadHeader, "header line must be \"<m> <k>\"", -1, 2, 1);
  const std::int64_t m = parse_int(header[0], 2);
  const std::int64_t k = parse_int(header[1], 2);
  if (m < 1) throw Error(Errc::BadHeader, "machine count must be >= 1", -1, 2, header[0].col);
  if (k < 1) throw Error(Errc::BadHeader, "list count must be >= 1", -1, 2, header[1].col);

  if (static_cast<std::int64_t>(lines.size()) - 2 != k)
    throw Error(Errc::ListCountMismatch,
                "header announces " + std::to_string(k) + " lists but " +
                    std::to_string(lines.size() - 2) + " list lines follow");

  std::vector<std::vector<Time>> lists;
  lists.reserve(k);
  for (std::int64_t r = 0; r < k; ++r) {
    const int line_no = static_cast<int>(r) + 3;
    std::vector<Time> list;
    for (const Token& token : split_tokens(lines[r + 2], line_no, ' ')) {
      const Time p = parse_int(token, line_no);
      if (p < 1)
        throw Error(Errc::NonPositivePtime,
                    "line " + std::to_string(line_no) + " col " + std::to_string(token.col) +
                        ": ptime must be >= 1, got " + std::to_string(p),
                    -1, line_no, token.col);
      list.push_back(p);
    }
    lists.push_back(std::move(list));
  }
  return build_instance(static_cast<int>(m), std::move(lists));
}

std::string instance_digest(const Instance& instance) {
  const std::string bytes = serialize_instance(instance);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return hex;
}

std::string serialize_schedule(const Schedule& schedule) {
  std::string out = "step,list,job,ptime,machine,start,finish\n";
  for (const Assignment& a : schedule.assignments) {
    out += std::to_string(a.job.index_in_list) + ',' + std::to_string(a.job.list_id) + ',' +
           std::to_string(a.job.index_in_list) + ',' + std::to_string(a.job.ptime) + ',' +
           std::to_string(a.machine) + ',' + std::to_string(a.start) + ',' +
           std::to_string(a.finish) + '\n';
  }
  return out;
}

Schedule parse_schedule(const std::string& text, int machines) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0] != "step,list,job,ptime,machine,start,finish")
    throw Error(Errc::BadHeader, "missing schedule CSV header", -1, 1, 1);

  Schedule schedule;
  schedule.loads.assign(machines, 0);
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const int line_no = static_cast<int>(row) + 1;
    const std::vector<Token> fields = split_tokens(lines[row], line_no, ',');
    if (fields.size() != 7)
      throw Error(Errc::BadHeader, "line " + std::to_string(line_no) + ": expected 7 fields", -1,
                  line_no, 1);
    Assignment a;
    const std::int64_t step = parse_int(fields[0], line_no);
    a.job.list_id = static_cast<int>(parse_int(fields[1], line_no));
    a.job.index_in_list = static_cast<int>(parse_int(fields[2], line_no));
    a.job.ptime = parse_int(fields[3], line_no);
    a.machine = static_cast<int>(parse_int(fields[4], line_no));
    a.start = parse_int(fields[5], line_no);
    a.finish = parse_int(fields[6], line_no);
    if (step != a.job.index_in_list)
      throw Error(Errc::BadHeader,
                  "line " + std::to_string(line_no) + ": step must equal the job index", -1,
                  line_no, fields[0].col);
    if (a.machine >= 0 && a.machine < machines) schedule.loads[a.machine] += a.job.ptime;
    schedule.assignments.push_back(a);
  }
  schedule.makespan = 0;
  for (Time load : schedule.loads) schedule.makespan = std::max(schedule.makespan, load);
  return schedule;
}

std::string serialize_report(const EvaluationReport& report) {
  ordered_json doc;
  doc["format"] = "mls-report 1";
  doc["instance"] = {{"digest", report.digest}, {"m", report.m}, {"k", report.k}, {"n", report.n}};
  doc["lower_bound"] = report.lower_bound;
  doc["opt"] = report.opt ? ordered_json(*report.opt) : ordered_json(nullptr);
  doc["opt_reason"] = report.opt_reason;
  doc["oracle_explored"] = report.oracle_explored;
  doc["algorithms"] = {{"ljllm", algo_json(report.ljllm)},
                       {"ls_concatenate", algo_json(report.ls_concatenate)},
                       {"ls_round_robin", algo_json(report.ls_round_robin)},
                       {"lpt", algo_json(report.lpt)}};
  doc["checks"] = {{"schedule_valid", check_status_name(report.checks.schedule_valid)},
                   {"theorem1", check_status_name(report.checks.theorem1)},
                   {"lemma14", check_status_name(report.checks.lemma14)},
                   {"lemma15", check_status_name(report.checks.lemma15)},
                   {"eq4", check_status_name(report.checks.eq4)},
                   {"accounting", check_status_name(report.checks.accounting)},
                   {"degeneracy", check_status_name(report.checks.degeneracy)}};
  doc["check_notes"] = report.check_notes;
  ordered_json sources = ordered_json::array();
  for (const SourceStat& s : report.sources.per_list) {
    sources.push_back({{"list", s.list_id},
                       {"jobs", s.jobs},
                       {"total_ptime", s.total_ptime},
                       {"last_finish", s.last_finish},
                       {"mean_finish", s.mean_finish.str()}});
  }
  doc["sources"] = std::move(sources);
  return doc.dump(2) + "\n";
}

std::string serialize_summary(const SweepSummary& summary) {
  ordered_json doc;
  doc["format"] = "mls-summary 1";
  doc["instances"] = summary.instances;
  ordered_json checks = ordered_json::object();
  for (const auto& [name, counter] : summary.checks) {
    checks[name] = {{"pass", counter.pass},
                    {"fail", counter.fail},
                    {"not_applicable", counter.not_applicable}};
  }
  doc["checks"] = std::move(checks);
  ordered_json worst_ljllm = ordered_json::object();
  for (const auto& [key, ratio] : summary.worst_ljllm_ratio) worst_ljllm[key] = ratio.str();
  doc["worst_ljllm_ratio"] = std::move(worst_ljllm);
  ordered_json worst_ls = ordered_json::object();
  for (const auto& [key, ratio] : summary.worst_ls_ratio) worst_ls[key] = ratio.str();
  doc["worst_ls_ratio"] = std::move(worst_ls);
  doc["verdict"] = summary.ok() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace mls

#include "fairteam/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "fairteam/errors.hpp"
#include "fairteam/random.hpp"

namespace fairteam {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> Split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.emplace_back(Trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string> SplitSkills(std::string_view field) {
  std::vector<std::string> skills;
  for (std::string& s : Split(field, ';')) {
    if (!s.empty()) skills.push_back(std::move(s));
  }
  return skills;
}

// Header-driven row reader. Blank lines are skipped; line numbers are 1-based
// physical lines.
class CsvTable {
 public:
  CsvTable(std::istream& in, std::string source,
           std::initializer_list<std::string_view> required)
      : in_(in), source_(std::move(source)) {
    std::string header;
    while (std::getline(in_, header)) {
      ++line_;
      if (!Trim(header).empty()) break;
    }
    if (Trim(header).empty()) throw DataError(source_, 0, "missing header row");
    columns_ = Split(header, ',');
    for (std::string_view name : required) {
      auto it = std::find(columns_.begin(), columns_.end(), name);
      if (it == columns_.end()) {
        throw DataError(source_, line_,
                        fmt::format("header lacks column '{}'", name));
      }
      index_[std::string(name)] = static_cast<std::size_t>(it - columns_.begin());
    }
  }

  bool Next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (Trim(raw).empty()) continue;
      row_ = Split(raw, ',');
      if (row_.size() != columns_.size()) {
        Fail(fmt::format("expected {} fields, found {}", columns_.size(),
                         row_.size()));
      }
      return true;
    }
    return false;
  }

  const std::string& operator[](std::string_view column) const {
    return row_[index_.at(std::string(column))];
  }

  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw DataError(source_, line_, what);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
  std::vector<std::string> columns_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> row_;
};

double ParseCost(std::string_view text, const CsvTable& table) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    table.Fail(fmt::format("cannot parse cost '{}'", text));
  }
  return value;
}

std::optional<AttributeClass> ParseAttribute(std::string_view token) {
  if (token == "0") return AttributeClass::kZero;
  if (token == "1") return AttributeClass::kOne;
  return std::nullopt;
}

// Checks shared by both formats; `fail` reports against the right location.
template <typename Fail>
void CheckRecord(const PoolRecord& r, std::unordered_set<std::string>& seen,
                 Fail&& fail) {
  if (r.id.empty()) fail("empty candidate id");
  if (!seen.insert(r.id).second) fail("duplicate candidate id '" + r.id + "'");
  if (!std::isfinite(r.cost) || r.cost <= 0.0) {
    fail(fmt::format("cost of candidate '{}' must be positive, got {}", r.id,
                     r.cost));
  }
  if (r.skills.empty()) fail("candidate '" + r.id + "' lists no skills");
}

std::vector<PoolRecord> ReadPoolCsv(std::istream& in, const std::string& source) {
  CsvTable table(in, source, {"id", "cost", "attribute", "skills"});
  std::vector<PoolRecord> records;
  std::unordered_set<std::string> seen;
  while (table.Next()) {
    PoolRecord r;
    r.id = table["id"];
    r.cost = ParseCost(table["cost"], table);
    const auto attr = ParseAttribute(table["attribute"]);
    if (!attr) {
      table.Fail(fmt::format("unknown attribute token '{}'", table["attribute"]));
    }
    r.attribute = *attr;
    r.skills = SplitSkills(table["skills"]);
    CheckRecord(r, seen, [&](const std::string& what) { table.Fail(what); });
    records.push_back(std::move(r));
  }
  return records;
}

json ParseJsonArray(std::istream& in, const std::string& source) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DataError(source, 0, "expected a JSON array");
  return doc;
}

std::vector<std::string> JsonSkills(const json& node, const std::string& where) {
  std::vector<std::string> skills;
  if (node.is_string()) return SplitSkills(node.get<std::string>());
  if (!node.is_array()) throw DataError(where, 0, "skills must be an array");
  for (const json& s : node) {
    if (!s.is_string()) throw DataError(where, 0, "skill must be a string");
    skills.push_back(s.get<std::string>());
  }
  return skills;
}

std::vector<PoolRecord> ReadPoolJson(std::istream& in, const std::string& source) {
  const json doc = ParseJsonArray(in, source);
  std::vector<PoolRecord> records;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = fmt::format("{}[{}]", source, i);
    auto fail = [&](const std::string& what) { throw DataError(where, 0, what); };
    const json& obj = doc[i];
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("cost") ||
        !obj.contains("attribute") || !obj.contains("skills")) {
      fail("record needs id, cost, attribute and skills");
    }
    PoolRecord r;
    try {
      r.id = obj["id"].is_string() ? obj["id"].get<std::string>()
                                   : obj["id"].dump();
      r.cost = obj["cost"].get<double>();
    } catch (const json::exception& e) {
      fail(e.what());
    }
    const json& a = obj["attribute"];
    const std::string token = a.is_string() ? a.get<std::string>() : a.dump();
    const auto attr = ParseAttribute(token);
    if (!attr) fail("unknown attribute token '" + token + "'");
    r.attribute = *attr;
    r.skills = JsonSkills(obj["skills"], where);
    CheckRecord(r, seen, fail);
    records.push_back(std::move(r));
  }
  return records;
}

Project MakeProject(std::string id, const std::vector<std::string>& skills) {
  std::set<SkillId> reqs;
  for (const std::string& s : skills) reqs.emplace(s);
  return Project(std::move(id), std::move(reqs));
}

std::vector<Project> ReadProjectsCsv(std::istream& in, const std::string& source) {
  CsvTable table(in, source, {"id", "skills"});
  std::vector<Project> projects;
  std::unordered_set<std::string> seen;
  while (table.Next()) {
    const std::string& id = table["id"];
    if (id.empty()) table.Fail("empty project id");
    if (!seen.insert(id).second) table.Fail("duplicate project id '" + id + "'");
    const auto skills = SplitSkills(table["skills"]);
    if (skills.empty()) table.Fail("project '" + id + "' has no requirements");
    projects.push_back(MakeProject(id, skills));
  }
  return projects;
}

std::vector<Project> ReadProjectsJson(std::istream& in, const std::string& source) {
  const json doc = ParseJsonArray(in, source);
  std::vector<Project> projects;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = fmt::format("{}[{}]", source, i);
    const json& obj = doc[i];
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("skills")) {
      throw DataError(where, 0, "record needs id and skills");
    }
    const std::string id = obj["id"].is_string() ? obj["id"].get<std::string>()
                                                 : obj["id"].dump();
    if (!seen.insert(id).second) {
      throw DataError(where, 0, "duplicate project id '" + id + "'");
    }
    const auto skills = JsonSkills(obj["skills"], where);
    if (skills.empty()) {
      throw DataError(where, 0, "project '" + id + "' has no requirements");
    }
    projects.push_back(MakeProject(id, skills));
  }
  return projects;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path.string(), 0, "cannot open file for writing");
  return out;
}

std::string JoinSkills(const std::vector<std::string>& skills) {
  return fmt::format("{}", fmt::join(skills, ";"));
}

// k distinct indices out of [0, n), sorted.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

void CheckProportion(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidInput(fmt::format("attribute proportion must lie in (0, 1), got {}", p));
  }
}

}  // namespace

FileFormat FormatForPath(const std::filesystem::path& path) {
  return path.extension() == ".json" ? FileFormat::kJson : FileFormat::kCsv;
}

std::vector<PoolRecord> read_pool_records(std::istream& in, FileFormat format,
                                          const std::string& source) {
  return format == FileFormat::kJson ? ReadPoolJson(in, source)
                                     : ReadPoolCsv(in, source);
}

std::vector<Project> read_projects(std::istream& in, FileFormat format,
                                   const std::string& source) {
  return format == FileFormat::kJson ? ReadProjectsJson(in, source)
                                     : ReadProjectsCsv(in, source);
}

Candidate ToCandidate(const PoolRecord& record) {
  CostProfile profile;
  for (const std::string& s : record.skills) profile.emplace(SkillId(s), record.cost);
  return Candidate(record.id, record.attribute, std::move(profile));
}

PoolRecord ToRecord(const Candidate& candidate) {
  PoolRecord r;
  r.id = candidate.id();
  r.attribute = candidate.attribute();
  r.cost = candidate.cost_profile().begin()->second;
  for (const auto& [skill, cost] : candidate.cost_profile()) {
    if (cost != r.cost) {
      throw InvalidInput("candidate " + candidate.id() +
                         " has per-skill costs; pool files store one cost");
    }
    r.skills.push_back(skill.str());
  }
  return r;
}

void reassign_attributes(std::vector<PoolRecord>& records, double proportion,
                         std::uint64_t seed) {
  CheckProportion(proportion);
  const std::size_t n = records.size();
  const auto zeros = static_cast<std::size_t>(
      std::llround(proportion * static_cast<double>(n)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    records[order[k]].attribute =
        k < zeros ? AttributeClass::kZero : AttributeClass::kOne;
  }
}

std::vector<Candidate> load_pool(const std::filesystem::path& path,
                                 std::optional<double> proportion,
                                 std::uint64_t seed) {
  std::ifstream in = OpenForRead(path);
  std::vector<PoolRecord> records =
      read_pool_records(in, FormatForPath(path), path.string());
  if (records.empty()) throw DataError(path.string(), 0, "pool file has no records");
  if (proportion) reassign_attributes(records, *proportion, seed);
  std::vector<Candidate> pool;
  pool.reserve(records.size());
  for (const PoolRecord& r : records) pool.push_back(ToCandidate(r));
  return pool;
}

std::vector<Project> load_projects(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::vector<Project> projects =
      read_projects(in, FormatForPath(path), path.string());
  if (projects.empty()) {
    throw DataError(path.string(), 0, "project file has no records");
  }
  return projects;
}

void write_pool(std::ostream& out, std::span<const Candidate> pool,
                FileFormat format) {
  if (format == FileFormat::kJson) {
    json doc = json::array();
    for (const Candidate& c : pool) {
      const PoolRecord r = ToRecord(c);
      doc.push_back({{"id", r.id},
                     {"cost", r.cost},
                     {"attribute", r.attribute == AttributeClass::kZero ? 0 : 1},
                     {"skills", r.skills}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "id,cost,attribute,skills\n";
  for (const Candidate& c : pool) {
    const PoolRecord r = ToRecord(c);
    out << fmt::format("{},{},{},{}\n", r.id, r.cost, ToString(r.attribute),
                       JoinSkills(r.skills));
  }
}

void write_projects(std::ostream& out, std::span<const Project> projects,
                    FileFormat format) {
  if (format == FileFormat::kJson) {
    json doc = json::array();
    for (const Project& p : projects) {
      std::vector<std::string> skills;
      for (const SkillId& s : p.requirements()) skills.push_back(s.str());
      doc.push_back({{"id", p.id()}, {"skills", skills}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "id,skills\n";
  for (const Project& p : projects) {
    std::vector<std::string> skills;
    for (const SkillId& s : p.requirements()) skills.push_back(s.str());
    out << p.id() << ',' << JoinSkills(skills) << '\n';
  }
}

void save_pool(const std::filesystem::path& path, std::span<const Candidate> pool) {
  std::ofstream out = OpenForWrite(path);
  write_pool(out, pool, FormatForPath(path));
}

void save_projects(const std::filesystem::path& path,
                   std::span<const Project> projects) {
  std::ofstream out = OpenForWrite(path);
  write_projects(out, projects, FormatForPath(path));
}

std::string SkillToken(std::size_t index, std::size_t universe) {
  const std::size_t width = std::to_string(universe > 0 ? universe - 1 : 0).size();
  return fmt::format("s{:0{}}", index, width);
}

std::vector<Candidate> synthesize_pool(const SynthesisSpec& spec) {
  if (spec.pool_size == 0) throw InvalidInput("pool size must be positive");
  if (spec.min_skills < 1 || spec.min_skills > spec.max_skills) {
    throw InvalidInput("skills per candidate needs 1 <= min <= max");
  }
  if (spec.skill_universe < spec.max_skills) {
    throw InvalidInput(fmt::format(
        "skill universe ({}) is smaller than the maximum skills per candidate ({})",
        spec.skill_universe, spec.max_skills));
  }
  if (!(spec.cost_lo > 0.0) || !(spec.cost_hi >= spec.cost_lo)) {
    throw InvalidInput("cost range needs 0 < lo <= hi");
  }
  CheckProportion(spec.proportion);

  Rng rng(Mix64(spec.seed));
  std::uniform_int_distribution<std::size_t> count(spec.min_skills, spec.max_skills);
  std::uniform_real_distribution<double> log_cost(std::log(spec.cost_lo),
                                                  std::log(spec.cost_hi));
  const std::size_t id_width = std::to_string(spec.pool_size).size();
  std::vector<PoolRecord> records;
  records.reserve(spec.pool_size);
  for (std::size_t i = 0; i < spec.pool_size; ++i) {
    PoolRecord r;
    r.id = fmt::format("u{:0{}}", i + 1, id_width);
    r.cost = spec.cost_lo == spec.cost_hi ? spec.cost_lo
                                          : std::exp(log_cost(rng));
    r.cost = std::clamp(r.cost, spec.cost_lo, spec.cost_hi);
    for (std::size_t s : SampleIndices(spec.skill_universe, count(rng), rng)) {
      r.skills.push_back(SkillToken(s, spec.skill_universe));
    }
    records.push_back(std::move(r));
  }
  reassign_attributes(records, spec.proportion, Mix64(spec.seed ^ 0xa77ULL));

  std::vector<Candidate> pool;
  pool.reserve(records.size());
  for (const PoolRecord& r : records) pool.push_back(ToCandidate(r));
  return pool;
}

std::vector<Project> synthesize_projects(const ProjectSynthesisSpec& spec) {
  if (spec.count == 0) throw InvalidInput("project count must be positive");
  if (spec.min_requirements < 1 || spec.min_requirements > spec.max_requirements) {
    throw InvalidInput("requirements per project needs 1 <= min <= max");
  }
  if (spec.skill_universe < spec.max_requirements) {
    throw InvalidInput("skill universe is smaller than the maximum requirements");
  }
  Rng rng(Mix64(spec.seed ^ 0x9f0ULL));
  std::uniform_int_distribution<std::size_t> count(spec.min_requirements,
                                                   spec.max_requirements);
  const std::size_t id_width = std::to_string(spec.count).size();
  std::vector<Project> projects;
  projects.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::set<SkillId> reqs;
    for (std::size_t s : SampleIndices(spec.skill_universe, count(rng), rng)) {
      reqs.emplace(SkillToken(s, spec.skill_universe));
    }
    projects.emplace_back(fmt::format("p{:0{}}", i + 1, id_width), std::move(reqs));
  }
  return projects;
}

}  // namespace fairteam

#ifndef FAIRTEAM_DATA_IO_HPP
#define FAIRTEAM_DATA_IO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairteam/model.hpp"

namespace fairteam {

// Files are either delimiter-separated text with a header row
// (pool: id,cost,attribute,skills; projects: id,skills; skills joined by ';')
// or a JSON array of objects with the same keys and `skills` as an array.
enum class FileFormat { kCsv, kJson };

// kJson for a ".json" extension, kCsv otherwise.
FileFormat FormatForPath(const std::filesystem::path& path);

// One pool record: a declared cost applied to every listed skill.
struct PoolRecord {
  std::string id;
  double cost = 0.0;
  AttributeClass attribute = AttributeClass::kZero;
  std::vector<std::string> skills;
};

// Parsing never reassigns attributes. Throws DataError naming the line (CSV)
// or record index (JSON) on duplicate ids, non-positive costs, unknown
// attribute tokens, empty skill lists or malformed rows.
std::vector<PoolRecord> read_pool_records(std::istream& in, FileFormat format,
                                          const std::string& source);
std::vector<Project> read_projects(std::istream& in, FileFormat format,
                                   const std::string& source);

// Candidate whose cost profile maps each listed skill to the declared cost.
Candidate ToCandidate(const PoolRecord& record);
// Inverse of ToCandidate. Throws InvalidInput if the profile is not flat.
PoolRecord ToRecord(const Candidate& candidate);

// Exactly round(p * n) candidates get kZero, chosen by a shuffle seeded with
// `seed`; the rest get kOne. Requires 0 < p < 1.
void reassign_attributes(std::vector<PoolRecord>& records, double proportion,
                         std::uint64_t seed);

std::vector<Candidate> load_pool(const std::filesystem::path& path,
                                 std::optional<double> proportion = std::nullopt,
                                 std::uint64_t seed = 0);
// Throws DataError on an empty file.
std::vector<Project> load_projects(const std::filesystem::path& path);

void write_pool(std::ostream& out, std::span<const Candidate> pool,
                FileFormat format);
void write_projects(std::ostream& out, std::span<const Project> projects,
                    FileFormat format);
void save_pool(const std::filesystem::path& path, std::span<const Candidate> pool);
void save_projects(const std::filesystem::path& path,
                   std::span<const Project> projects);

// Synthetic stand-in for a freelancer-style pool. Costs are log-uniform over
// [cost_lo, cost_hi], skill counts uniform over [min_skills, max_skills].
struct SynthesisSpec {
  std::size_t pool_size = 1211;
  std::size_t skill_universe = 175;
  std::size_t min_skills = 1;
  std::size_t max_skills = 5;
  double cost_lo = 0.01;
  double cost_hi = 1.0;
  double proportion = 0.5;  // share of kZero candidates
  std::uint64_t seed = 42;
};

struct ProjectSynthesisSpec {
  std::size_t count = 600;
  std::size_t skill_universe = 175;
  std::size_t min_requirements = 2;
  std::size_t max_requirements = 5;
  std::uint64_t seed = 42;
};

// Skill token of index i in a universe of `universe` skills, e.g. "s007".
std::string SkillToken(std::size_t index, std::size_t universe);

// Throw InvalidInput on inconsistent specs.
std::vector<Candidate> synthesize_pool(const SynthesisSpec& spec);
std::vector<Project> synthesize_projects(const ProjectSynthesisSpec& spec);

}  // namespace fairteam

#endif  // FAIRTEAM_DATA_IO_HPP

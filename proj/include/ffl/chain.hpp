#ifndef FFL_CHAIN_HPP
#define FFL_CHAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffl/prove.hpp"

namespace ffl {

struct ChainEntry {
  std::string file;
  bool is_il = false;  // deduced from extension, overridable
};

struct ChainStep {
  Hints hints;
  std::string note;
};

// Ordered program chain plus per-adjacent-step hints and the global input
// grid / argument family.
struct ChainManifest {
  std::vector<ChainEntry> programs;
  std::vector<ChainStep> steps;  // steps[i] relates programs[i] and programs[i+1]
  InputGrid grid;
  std::string family;  // "", "pagerank nodes N iters K", "kmeans points N hi H k K iters I"
  std::string base_dir;
};

struct ManifestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ChainManifest parse_manifest(const std::string& text, const std::string& base_dir);
ChainManifest parse_manifest_file(const std::string& path);

struct StepReport {
  Verdict verdict;
  ProofReport proof;
};

struct ChainReport {
  std::vector<StepReport> steps;
  Verdict::Kind overall = Verdict::Kind::Equivalent;
  std::string text;  // deterministic rendering, one finding per line
  int exit_code() const;
};

// Loads and translates every entry, checks the shared signature, proves each
// adjacent pair equivalent, and aggregates.
ChainReport verify_chain(const ChainManifest& manifest);

std::shared_ptr<const ArgSource> make_family(const std::string& spec);

}  // namespace ffl

#endif

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asmloops/core.hpp"

namespace asmloops {

// Depth-first walk over height functions, lexicographic by rows.
class EnumerationCursor {
 public:
  explicit EnumerationCursor(int n);

  std::optional<HeightFunction> next();
  std::size_t yielded() const { return yielded_; }

 private:
  bool fits(int k, int v) const;

  int n_;
  int cells_;
  Grid<int> h_;
  std::vector<int> choice_;
  bool started_ = false;
  bool done_ = false;
  std::size_t yielded_ = 0;
};

std::vector<Asm> enumerate_asms(int n);
void for_each_asm(int n, const std::function<void(const Asm&)>& f);

// Throw SizeMismatch for different sizes.
bool height_leq(const HeightFunction& a, const HeightFunction& b);
HeightFunction height_meet(const HeightFunction& a, const HeightFunction& b);
HeightFunction height_join(const HeightFunction& a, const HeightFunction& b);

enum class Suite { RoundTrips, InvEquivalence, Contributions, Commuting, Reflection };

inline constexpr int kMaxVerifySize = 8;

std::string suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct Failure {
  std::size_t index = 0;  // position in the enumeration
  std::string check;
  IntMatrix object;  // the offending ASM
};

struct VerifyOptions {
  int jobs = 1;
  // Check only items whose index is congruent to shard_residue.
  int shard_modulus = 1;
  int shard_residue = 0;
  std::size_t max_failures = 10;
};

struct VerifyReport {
  Suite suite = Suite::RoundTrips;
  int n = 0;
  std::size_t items = 0;
  std::vector<Failure> failures;  // earliest first
  long millis = 0;

  bool ok() const { return failures.empty(); }
};

// Name of the first failing check, or nothing when the item passes.
std::optional<std::string> check_item(Suite s, const Asm& a);

std::vector<VerifyReport> verify_all(int n, const std::vector<Suite>& suites,
                                     const VerifyOptions& opts = {});

}  // namespace asmloops

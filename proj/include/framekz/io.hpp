#pragma once

#include <map>
#include <string>

#include "framekz/kaczmarz.hpp"
#include "framekz/types.hpp"

namespace framekz {

/// Raised for unreadable, malformed, or structurally invalid documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceDoc {
  VecList vectors;
  std::map<std::string, std::string> metadata;
};

/// Sequence document: {"dim": d, "vectors": [[[re,im],...],...],
/// "metadata": {...}}.  Numbers survive a write/read cycle bit-for-bit.
SequenceDoc read_sequence(const std::string& path);
void write_sequence(const std::string& path, const VecList& vectors,
                    const std::map<std::string, std::string>& metadata = {});

/// Matrix document: {"rows": r, "cols": c, "entries": [[[re,im],...],...]}.
Mat read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Mat& m);

/// CSV with header "n,residual,coef_abs,energy_residual"; one row per step.
void write_trace_csv(const std::string& path, const KaczmarzTrace& trace,
                     const Vec& x);

}  // namespace framekz

#pragma once

// ============================================================================
// File formats and digests.
//
// JSON interchange for algebra tables (wha.json), fusion rings (fusion.json)
// and F-symbol data (fsymbols.json); a small binary format (.ctf) for dense
// complex tensors; SHA-256 digests for report provenance; and a plain-text
// sample format for eigenvalue sequences.
//
// All parsers throw InputError with a diagnostic message on malformed or
// inconsistent input; writers are deterministic (identical values produce
// byte-identical files).
// ============================================================================

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wharf/category.hpp"
#include "wharf/fusion_ring.hpp"
#include "wharf/numerics.hpp"
#include "wharf/wha.hpp"

namespace wharf {

// ==== algebra tables (wha.json) =============================================

/// Serializes a table as
///   {"dim": n, "basis": [...], "mult": [[x,y,z,re,im],...],
///    "comult": [[z,x,y,re,im],...], "unit": [[x,re,im],...],
///    "counit": [[x,re,im],...], "antipode": [[x,y,re,im],...],
///    "star": [[x,y,re,im],...], "name": "..."}
/// with 0-based indices, sparse rows sorted lexicographically, exact zeros
/// omitted, and one row per line.  Matrix rows are [row, column, re, im].
std::string wha_to_json(const WeakHopfAlgebraTable& table);

/// Parses the format above.  Unknown keys are ignored; missing required
/// keys, out-of-range indices or malformed rows raise InputError.
WeakHopfAlgebraTable wha_from_json(const std::string& text);

// ==== fusion rings (fusion.json) ============================================

/// Parses {"labels": [...], "unit": "...", "dual": {...}, "N": [[a,b,c,n],...],
/// "dims": {...optional...}, "name": "...optional..."}.  Entries of N rows
/// may be label strings or 0-based indices.  The ring axioms are validated;
/// declared dims are cross-checked against the Frobenius-Perron dimensions
/// (tolerance 1e-6).
FusionRingData fusion_from_json(const std::string& text);

/// Serializes a ring in the format above (labels as strings, rows sorted,
/// computed dims included).
std::string fusion_to_json(const FusionRingData& ring);

// ==== F-symbols (fsymbols.json) =============================================

/// Parsed contents of an fsymbols.json file.
struct FSymbolFile {
  std::map<std::array<int, 6>, cxd> entries;
  /// Declared per-label bending phases, when present (values may be written
  /// as a plain number or as a [re, im] pair).
  std::optional<std::vector<cxd>> kappa;
};

/// Parses {"entries": [[a,b,c,d,e,f,re,im],...], "kappa": {...optional...}}.
/// Index entries may be label strings or 0-based indices into `ring`.
FSymbolFile fsymbols_from_json(const std::string& text,
                               const FusionRingData& ring);

/// Serializes F-symbol data in the format above.
std::string fsymbols_to_json(const FusionRingData& ring,
                             const std::map<std::array<int, 6>, cxd>& entries,
                             const std::optional<std::vector<cxd>>& kappa);

/// Builds the category from parsed fusion and F-symbol texts.  When the
/// F-symbol file declares kappa values they are cross-checked against the
/// computed bending phases within 1e-6 (mismatch raises InputError).
Category load_category(const std::string& fusion_json_text,
                       const std::string& fsymbols_json_text);

// ==== dense complex tensors (.ctf) ==========================================

/// A dense row-major complex tensor with explicit dimensions.
struct CtfTensor {
  std::vector<std::uint32_t> dims;
  std::vector<cxd> data;
};

/// Writes magic (16 bytes), u32 rank, u32 dims, then row-major f64 (re, im)
/// pairs; all integers and floats little-endian.
void write_ctf(const std::string& path, const CtfTensor& tensor);

/// Reads and validates the format above.
CtfTensor read_ctf(const std::string& path);

/// Rank-2 conveniences for density-matrix dumps.
void write_ctf_matrix(const std::string& path, const Mat& m);
Mat read_ctf_matrix(const std::string& path);

// ==== plain files and digests ===============================================

/// Whole-file read; raises InputError when the file cannot be opened.
std::string read_text_file(const std::string& path);

/// Whole-file write; raises std::runtime_error when the file cannot be
/// written.
void write_text_file(const std::string& path, const std::string& text);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Lowercase hex SHA-256 of a file's contents.
std::string sha256_file(const std::string& path);

// ==== sequence samples ======================================================

/// Parses one sample per line: "re" or "re im"; blank lines and lines whose
/// first non-space character is '#' are skipped.
std::vector<cxd> sequence_from_text(const std::string& text);

}  // namespace wharf

#include "wharf/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "wharf/errors.hpp"

namespace wharf {

namespace {

using json = nlohmann::ordered_json;

// ==== shared JSON helpers ===================================================

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string(what) + ": missing key '" + key + "'");
  }
  return obj.at(key);
}

/// Sparse rows are emitted one per line so golden files diff cleanly.
std::string dump_rows(const std::vector<json>& rows) {
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "    ";
    out += rows[i].dump();
    out += (i + 1 < rows.size()) ? ",\n" : "\n";
  }
  out += "  ]";
  return out;
}

double number_of(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InputError(std::string(what) + ": expected a number, got " +
                     j.dump());
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw InputError(std::string(what) + ": non-finite number");
  }
  return v;
}

long integer_of(const json& j, const char* what) {
  const double v = number_of(j, what);
  const double r = std::round(v);
  if (std::abs(v - r) > 0.0) {
    throw InputError(std::string(what) + ": expected an integer, got " +
                     j.dump());
  }
  return static_cast<long>(r);
}

int index_in(const json& j, int dim, const char* what) {
  const long v = integer_of(j, what);
  if (v < 0 || v >= dim) {
    std::ostringstream msg;
    msg << what << ": index " << v << " out of range [0, " << dim << ")";
    throw InputError(msg.str());
  }
  return static_cast<int>(v);
}

int label_index(const json& j, const std::vector<std::string>& labels,
                const char* what) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<int>(i);
    }
    throw InputError(std::string(what) + ": unknown label '" + s + "'");
  }
  return index_in(j, static_cast<int>(labels.size()), what);
}

const json& row_of(const json& j, std::size_t len, const char* what) {
  if (!j.is_array() || j.size() != len) {
    throw InputError(std::string(what) + ": expected a row of length " +
                     std::to_string(len) + ", got " + j.dump());
  }
  return j;
}

cxd complex_of(const json& re, const json& im, const char* what) {
  return cxd{number_of(re, what), number_of(im, what)};
}

/// Parses a complex value written either as a number or as [re, im].
cxd complex_value(const json& j, const char* what) {
  if (j.is_number()) return cxd{number_of(j, what), 0.0};
  if (j.is_array() && j.size() == 2) {
    return complex_of(j.at(0), j.at(1), what);
  }
  throw InputError(std::string(what) +
                   ": expected a number or an [re, im] pair, got " + j.dump());
}

json complex_row(std::initializer_list<int> idx, cxd v) {
  json row = json::array();
  for (int i : idx) row.push_back(i);
  row.push_back(v.real());
  row.push_back(v.imag());
  return row;
}

bool is_exact_zero(cxd v) { return v.real() == 0.0 && v.imag() == 0.0; }

}  // namespace

// ==== algebra tables (wha.json) =============================================

std::string wha_to_json(const WeakHopfAlgebraTable& table) {
  table.validate_shapes();
  const int n = table.dim;

  std::vector<json> mult, comult, unit, counit, antipode, star;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (const cxd v = table.lam(x, y, z); !is_exact_zero(v)) {
          mult.push_back(complex_row({x, y, z}, v));
        }
      }
    }
  }
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (const cxd v = table.gam(z, x, y); !is_exact_zero(v)) {
          comult.push_back(complex_row({z, x, y}, v));
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (const cxd v = table.unit(x); !is_exact_zero(v)) {
      unit.push_back(complex_row({x}, v));
    }
    if (const cxd v = table.counit(x); !is_exact_zero(v)) {
      counit.push_back(complex_row({x}, v));
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (const cxd v = table.antipode(r, c); !is_exact_zero(v)) {
        antipode.push_back(complex_row({r, c}, v));
      }
      if (const cxd v = table.star(r, c); !is_exact_zero(v)) {
        star.push_back(complex_row({r, c}, v));
      }
    }
  }

  std::string out = "{\n";
  out += "  \"dim\": " + std::to_string(n) + ",\n";
  out += "  \"basis\": " + json(table.basis_labels).dump() + ",\n";
  out += "  \"mult\": " + dump_rows(mult) + ",\n";
  out += "  \"comult\": " + dump_rows(comult) + ",\n";
  out += "  \"unit\": " + dump_rows(unit) + ",\n";
  out += "  \"counit\": " + dump_rows(counit) + ",\n";
  out += "  \"antipode\": " + dump_rows(antipode) + ",\n";
  out += "  \"star\": " + dump_rows(star) + ",\n";
  out += "  \"name\": " + json(table.name).dump() + "\n";
  out += "}\n";
  return out;
}

WeakHopfAlgebraTable wha_from_json(const std::string& text) {
  const json j = parse_json(text, "wha.json");
  const long dim = integer_of(field(j, "dim", "wha.json"), "wha.json dim");
  if (dim < 1 || dim > 4096) {
    throw InputError("wha.json: dim out of supported range");
  }
  const int n = static_cast<int>(dim);

  WeakHopfAlgebraTable table;
  table.init(n);

  const json& basis = field(j, "basis", "wha.json");
  if (!basis.is_array() || static_cast<int>(basis.size()) != n) {
    throw InputError("wha.json: basis must list exactly dim labels");
  }
  for (int i = 0; i < n; ++i) {
    if (!basis.at(i).is_string()) {
      throw InputError("wha.json: basis labels must be strings");
    }
    table.basis_labels[i] = basis.at(i).get<std::string>();
  }

  for (const json& row : field(j, "mult", "wha.json")) {
    const json& r = row_of(row, 5, "wha.json mult");
    const int x = index_in(r.at(0), n, "wha.json mult");
    const int y = index_in(r.at(1), n, "wha.json mult");
    const int z = index_in(r.at(2), n, "wha.json mult");
    table.lam_ref(x, y, z) = complex_of(r.at(3), r.at(4), "wha.json mult");
  }
  for (const json& row : field(j, "comult", "wha.json")) {
    const json& r = row_of(row, 5, "wha.json comult");
    const int z = index_in(r.at(0), n, "wha.json comult");
    const int x = index_in(r.at(1), n, "wha.json comult");
    const int y = index_in(r.at(2), n, "wha.json comult");
    table.gam_ref(z, x, y) = complex_of(r.at(3), r.at(4), "wha.json comult");
  }
  for (const json& row : field(j, "unit", "wha.json")) {
    const json& r = row_of(row, 3, "wha.json unit");
    const int x = index_in(r.at(0), n, "wha.json unit");
    table.unit(x) = complex_of(r.at(1), r.at(2), "wha.json unit");
  }
  for (const json& row : field(j, "counit", "wha.json")) {
    const json& r = row_of(row, 3, "wha.json counit");
    const int x = index_in(r.at(0), n, "wha.json counit");
    table.counit(x) = complex_of(r.at(1), r.at(2), "wha.json counit");
  }
  for (const json& row : field(j, "antipode", "wha.json")) {
    const json& r = row_of(row, 4, "wha.json antipode");
    const int a = index_in(r.at(0), n, "wha.json antipode");
    const int b = index_in(r.at(1), n, "wha.json antipode");
    table.antipode(a, b) = complex_of(r.at(2), r.at(3), "wha.json antipode");
  }
  for (const json& row : field(j, "star", "wha.json")) {
    const json& r = row_of(row, 4, "wha.json star");
    const int a = index_in(r.at(0), n, "wha.json star");
    const int b = index_in(r.at(1), n, "wha.json star");
    table.star(a, b) = complex_of(r.at(2), r.at(3), "wha.json star");
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) {
      throw InputError("wha.json: name must be a string");
    }
    table.name = j.at("name").get<std::string>();
  }
  table.validate_shapes();
  return table;
}

// ==== fusion rings (fusion.json) ============================================

FusionRingData fusion_from_json(const std::string& text) {
  const json j = parse_json(text, "fusion.json");

  const json& labels_j = field(j, "labels", "fusion.json");
  if (!labels_j.is_array() || labels_j.empty()) {
    throw InputError("fusion.json: labels must be a nonempty array");
  }
  std::vector<std::string> labels;
  for (const json& l : labels_j) {
    if (!l.is_string()) {
      throw InputError("fusion.json: labels must be strings");
    }
    labels.push_back(l.get<std::string>());
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t k = i + 1; k < labels.size(); ++k) {
      if (labels[i] == labels[k]) {
        throw InputError("fusion.json: duplicate label '" + labels[i] + "'");
      }
    }
  }

  FusionRingData ring;
  ring.init(labels);
  ring.unit = label_index(field(j, "unit", "fusion.json"), labels,
                          "fusion.json unit");

  const json& dual_j = field(j, "dual", "fusion.json");
  if (!dual_j.is_object()) {
    throw InputError("fusion.json: dual must map labels to labels");
  }
  std::vector<bool> dual_set(labels.size(), false);
  for (const auto& [key, value] : dual_j.items()) {
    const int a = label_index(json(key), labels, "fusion.json dual key");
    ring.dual[a] = label_index(value, labels, "fusion.json dual value");
    dual_set[a] = true;
  }
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (!dual_set[a]) {
      throw InputError("fusion.json: dual missing label '" + labels[a] + "'");
    }
  }

  for (const json& row : field(j, "N", "fusion.json")) {
    const json& r = row_of(row, 4, "fusion.json N");
    const int a = label_index(r.at(0), labels, "fusion.json N");
    const int b = label_index(r.at(1), labels, "fusion.json N");
    const int c = label_index(r.at(2), labels, "fusion.json N");
    const long mult = integer_of(r.at(3), "fusion.json N multiplicity");
    if (mult < 0) {
      throw InputError("fusion.json: negative fusion multiplicity");
    }
    ring.n_ref(a, b, c) = static_cast<int>(mult);
  }

  if (j.contains("name")) {
    if (!j.at("name").is_string()) {
      throw InputError("fusion.json: name must be a string");
    }
    ring.name = j.at("name").get<std::string>();
  } else {
    ring.name = "fusion";
  }

  validate_ring(ring);

  if (j.contains("dims")) {
    const json& dims_j = j.at("dims");
    if (!dims_j.is_object()) {
      throw InputError("fusion.json: dims must map labels to numbers");
    }
    const std::vector<double> computed = fp_dimensions(ring);
    for (const auto& [key, value] : dims_j.items()) {
      const int a = label_index(json(key), labels, "fusion.json dims key");
      const double declared = number_of(value, "fusion.json dims value");
      if (std::abs(declared - computed[a]) > 1e-6) {
        std::ostringstream msg;
        msg << "fusion.json: declared dim for '" << labels[a] << "' is "
            << declared << " but the fusion rules give " << computed[a];
        throw InputError(msg.str());
      }
    }
  }
  return ring;
}

std::string fusion_to_json(const FusionRingData& ring) {
  validate_ring(ring);
  const int r = ring.rank();

  std::vector<json> rows;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        if (ring.n(a, b, c) != 0) {
          rows.push_back(json::array({ring.labels[a], ring.labels[b],
                                      ring.labels[c], ring.n(a, b, c)}));
        }
      }
    }
  }

  json dual = json::object();
  for (int a = 0; a < r; ++a) {
    dual[ring.labels[a]] = ring.labels[ring.dual[a]];
  }
  const std::vector<double> dims = fp_dimensions(ring);
  json dims_j = json::object();
  for (int a = 0; a < r; ++a) dims_j[ring.labels[a]] = dims[a];

  std::string out = "{\n";
  out += "  \"labels\": " + json(ring.labels).dump() + ",\n";
  out += "  \"unit\": " + json(ring.labels[ring.unit]).dump() + ",\n";
  out += "  \"dual\": " + dual.dump() + ",\n";
  out += "  \"N\": " + dump_rows(rows) + ",\n";
  out += "  \"dims\": " + dims_j.dump() + ",\n";
  out += "  \"name\": " + json(ring.name).dump() + "\n";
  out += "}\n";
  return out;
}

// ==== F-symbols (fsymbols.json) =============================================

FSymbolFile fsymbols_from_json(const std::string& text,
                               const FusionRingData& ring) {
  const json j = parse_json(text, "fsymbols.json");
  FSymbolFile file;

  for (const json& row : field(j, "entries", "fsymbols.json")) {
    const json& r = row_of(row, 8, "fsymbols.json entries");
    std::array<int, 6> key{};
    for (int i = 0; i < 6; ++i) {
      key[i] = label_index(r.at(i), ring.labels, "fsymbols.json entries");
    }
    file.entries[key] =
        complex_of(r.at(6), r.at(7), "fsymbols.json entries");
  }

  if (j.contains("kappa")) {
    const json& kappa_j = j.at("kappa");
    if (!kappa_j.is_object()) {
      throw InputError("fsymbols.json: kappa must map labels to values");
    }
    std::vector<cxd> kappa(ring.rank(), cxd{1.0, 0.0});
    for (const auto& [key, value] : kappa_j.items()) {
      const int a = label_index(json(key), ring.labels, "fsymbols.json kappa");
      kappa[a] = complex_value(value, "fsymbols.json kappa");
    }
    file.kappa = std::move(kappa);
  }
  return file;
}

std::string fsymbols_to_json(const FusionRingData& ring,
                             const std::map<std::array<int, 6>, cxd>& entries,
                             const std::optional<std::vector<cxd>>& kappa) {
  std::vector<json> rows;
  for (const auto& [key, value] : entries) {
    json row = json::array();
    for (int i = 0; i < 6; ++i) row.push_back(ring.labels[key[i]]);
    row.push_back(value.real());
    row.push_back(value.imag());
    rows.push_back(std::move(row));
  }
  std::string out = "{\n";
  out += "  \"entries\": " + dump_rows(rows);
  if (kappa.has_value()) {
    json kappa_j = json::object();
    for (int a = 0; a < ring.rank(); ++a) {
      const cxd v = (*kappa)[a];
      if (v.imag() == 0.0) {
        kappa_j[ring.labels[a]] = v.real();
      } else {
        kappa_j[ring.labels[a]] = json::array({v.real(), v.imag()});
      }
    }
    out += ",\n  \"kappa\": " + kappa_j.dump();
  }
  out += "\n}\n";
  return out;
}

Category load_category(const std::string& fusion_json_text,
                       const std::string& fsymbols_json_text) {
  const FusionRingData ring = fusion_from_json(fusion_json_text);
  const FSymbolFile file = fsymbols_from_json(fsymbols_json_text, ring);
  Category cat(ring, file.entries, ring.name);
  if (file.kappa.has_value()) {
    for (int a = 0; a < ring.rank(); ++a) {
      if (std::abs(cat.kappa(a) - (*file.kappa)[a]) > 1e-6) {
        std::ostringstream msg;
        msg << "fsymbols.json: declared kappa for '" << ring.labels[a]
            << "' disagrees with the bending phase computed from the "
               "F-symbols";
        throw InputError(msg.str());
      }
    }
  }
  return cat;
}

// ==== dense complex tensors (.ctf) ==========================================

namespace {

constexpr std::array<unsigned char, 16> kCtfMagic = {
    'W', 'H', 'A', 'R', 'F', ' ', 'C', 'T', 'F', ' ',
    'v', '1', '\0', '\0', '\0', '\0'};
constexpr std::size_t kCtfMaxEntries = std::size_t{1} << 28;

void append_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
}

void append_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
  }
}

std::uint32_t take_u32(const std::string& in, std::size_t& pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i]))
         << (8 * i);
  }
  pos += 4;
  return v;
}

double take_f64(const std::string& in, std::size_t& pos) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i]))
            << (8 * i);
  }
  pos += 8;
  return std::bit_cast<double>(bits);
}

std::string read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

void write_ctf(const std::string& path, const CtfTensor& tensor) {
  std::size_t total = 1;
  for (std::uint32_t d : tensor.dims) {
    if (d == 0 || total > kCtfMaxEntries / d) {
      throw std::invalid_argument("ctf: dimensions out of supported range");
    }
    total *= d;
  }
  if (tensor.data.size() != total) {
    throw std::invalid_argument("ctf: data size does not match dimensions");
  }

  std::string out(reinterpret_cast<const char*>(kCtfMagic.data()),
                  kCtfMagic.size());
  append_u32(out, static_cast<std::uint32_t>(tensor.dims.size()));
  for (std::uint32_t d : tensor.dims) append_u32(out, d);
  for (const cxd& v : tensor.data) {
    append_f64(out, v.real());
    append_f64(out, v.imag());
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(out.data(), static_cast<std::streamsize>(out.size()))) {
    throw std::runtime_error("cannot write file: " + path);
  }
}

CtfTensor read_ctf(const std::string& path) {
  const std::string raw = read_binary_file(path);
  if (raw.size() < kCtfMagic.size() + 4 ||
      std::memcmp(raw.data(), kCtfMagic.data(), kCtfMagic.size()) != 0) {
    throw InputError("ctf: bad magic header in " + path);
  }
  std::size_t pos = kCtfMagic.size();
  const std::uint32_t rank = take_u32(raw, pos);
  if (rank > 16 || raw.size() < pos + 4u * rank) {
    throw InputError("ctf: corrupt dimension header in " + path);
  }
  CtfTensor tensor;
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    const std::uint32_t d = take_u32(raw, pos);
    if (d == 0 || total > kCtfMaxEntries / d) {
      throw InputError("ctf: dimensions out of supported range in " + path);
    }
    tensor.dims.push_back(d);
    total *= d;
  }
  if (raw.size() != pos + 16 * total) {
    throw InputError("ctf: payload size does not match dimensions in " + path);
  }
  tensor.data.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    const double re = take_f64(raw, pos);
    const double im = take_f64(raw, pos);
    tensor.data.emplace_back(re, im);
  }
  return tensor;
}

void write_ctf_matrix(const std::string& path, const Mat& m) {
  CtfTensor tensor;
  tensor.dims = {static_cast<std::uint32_t>(m.rows()),
                 static_cast<std::uint32_t>(m.cols())};
  tensor.data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      tensor.data.push_back(m(r, c));
    }
  }
  write_ctf(path, tensor);
}

Mat read_ctf_matrix(const std::string& path) {
  const CtfTensor tensor = read_ctf(path);
  if (tensor.dims.size() != 2) {
    throw InputError("ctf: expected a rank-2 tensor in " + path);
  }
  Mat m(tensor.dims[0], tensor.dims[1]);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) = tensor.data[k++];
    }
  }
  return m;
}

// ==== plain files and digests ===============================================

std::string read_text_file(const std::string& path) {
  return read_binary_file(path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw std::runtime_error("cannot write file: " + path);
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int md_len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &md_len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * md_len);
  for (unsigned int i = 0; i < md_len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  return sha256_hex(read_binary_file(path));
}

// ==== sequence samples ======================================================

std::vector<cxd> sequence_from_text(const std::string& text) {
  std::vector<cxd> values;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    double re = 0.0, im = 0.0;
    try {
      std::size_t used = 0;
      re = std::stod(first, &used);
      if (used != first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("sequence line " + std::to_string(lineno) +
                       ": cannot parse '" + first + "'");
    }
    std::string second;
    if (fields >> second) {
      try {
        std::size_t used = 0;
        im = std::stod(second, &used);
        if (used != second.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("sequence line " + std::to_string(lineno) +
                         ": cannot parse '" + second + "'");
      }
      std::string extra;
      if (fields >> extra) {
        throw InputError("sequence line " + std::to_string(lineno) +
                         ": expected at most two fields");
      }
    }
    values.emplace_back(re, im);
  }
  return values;
}

}  // namespace wharf

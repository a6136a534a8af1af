#include "f2forms/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "f2forms/errors.hpp"
#include "json.hpp"

namespace f2forms {

namespace {

using nlohmann::json;

std::string index_list(std::span<const std::size_t> idx, std::size_t base) {
  std::string out = "[";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t != 0) out += ", ";
    out += std::to_string(idx[t] + base);
  }
  return out + "]";
}

std::string header(const MultilinearForm& form) {
  return "\"arity\": " + std::to_string(form.arity()) + ", \"dim\": " + std::to_string(form.dim());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t get_natural(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) throw FormatError(std::string("field '") + key + "' must be a natural number");
  return v.get<std::size_t>();
}

const json& get_array(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_array()) {
    throw FormatError(std::string("field '") + key + "' must be an array");
  }
  return obj.at(key);
}

std::vector<std::size_t> parse_index_list(const json& list, std::size_t limit, const char* what) {
  if (!list.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const json& v : list) {
    if (!v.is_number_unsigned()) throw FormatError(std::string(what) + " entries must be natural numbers");
    const auto i = v.get<std::size_t>();
    if (i < 1 || i > limit) throw FormatError(std::string(what) + " index out of range (1-based)");
    out.push_back(i - 1);
  }
  return out;
}

MultilinearForm form_from_json(const json& doc) {
  const std::size_t arity = get_natural(doc, "arity");
  const std::size_t dim = get_natural(doc, "dim");
  const json& monomials = get_array(doc, "monomials");
  MultilinearForm form(arity, dim);
  for (const json& m : monomials) {
    const auto idx = parse_index_list(m, dim, "monomial");
    if (idx.size() != arity) throw FormatError("monomial length differs from arity");
    if (form.coeff(idx)) throw FormatError("duplicate monomial " + index_list(idx, 1));
    form.set_coeff(idx);
  }
  return form;
}

}  // namespace

std::string write_sparse_form(const MultilinearForm& form) {
  const auto monomials = form.monomials();
  std::string out = "{\n  \"arity\": " + std::to_string(form.arity()) + ",\n  \"dim\": " +
                    std::to_string(form.dim()) + ",\n  \"monomials\": [";
  if (monomials.empty()) return out + "]\n}\n";
  out += "\n";
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    out += "    " + index_list(monomials[i], 1);
    out += (i + 1 < monomials.size()) ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

std::string write_sparse_form_inline(const MultilinearForm& form) {
  std::string out = "{" + header(form) + ", \"monomials\": [";
  const auto monomials = form.monomials();
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i != 0) out += ", ";
    out += index_list(monomials[i], 1);
  }
  return out + "]}";
}

MultilinearForm parse_sparse_form(std::string_view text) { return form_from_json(parse_json(text)); }

std::string write_certificate(const PartitionCertificate& certificate) {
  validate(certificate);
  std::string out = "{\n  \"arity\": " + std::to_string(certificate.arity) + ",\n  \"dim\": " +
                    std::to_string(certificate.dim) + ",\n  \"summands\": [";
  if (certificate.summands.empty()) return out + "]\n}\n";
  out += "\n";
  for (std::size_t i = 0; i < certificate.summands.size(); ++i) {
    const auto& s = certificate.summands[i];
    out += "    {\"axes\": " + index_list(s.left_axes, 1) + ", \"left\": " +
           write_sparse_form_inline(s.left) + ", \"right\": " + write_sparse_form_inline(s.right) + "}";
    out += (i + 1 < certificate.summands.size()) ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

PartitionCertificate parse_certificate(std::string_view text) {
  const json doc = parse_json(text);
  PartitionCertificate c;
  c.arity = get_natural(doc, "arity");
  c.dim = get_natural(doc, "dim");
  for (const json& s : get_array(doc, "summands")) {
    if (!s.is_object() || !s.contains("axes") || !s.contains("left") || !s.contains("right")) {
      throw FormatError("summand needs axes, left and right");
    }
    PartitionSummand summand;
    summand.left_axes = parse_index_list(s.at("axes"), c.arity, "axes");
    summand.left = form_from_json(s.at("left"));
    summand.right = form_from_json(s.at("right"));
    c.summands.push_back(std::move(summand));
  }
  try {
    validate(c);
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
  return c;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace f2forms

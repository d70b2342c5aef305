#include "zetalaurent/symbolic.hpp"

#include "json.hpp"

#include "zetalaurent/errors.hpp"

namespace zl {

std::string to_string(SymbolicTarget t) {
  switch (t) {
    case SymbolicTarget::eta: return "eta";
    case SymbolicTarget::gamma: return "gamma";
    case SymbolicTarget::lambda_tilde: return "lambda";
  }
  return "eta";
}

SymbolicTarget parse_symbolic_target(std::string_view text) {
  if (text == "eta") return SymbolicTarget::eta;
  if (text == "gamma") return SymbolicTarget::gamma;
  if (text == "lambda" || text == "lambda_tilde") return SymbolicTarget::lambda_tilde;
  throw FormatError("unknown expansion target '" + std::string(text) + "' (expected eta, gamma or lambda)");
}

SymbolicExpansion::SymbolicExpansion(SymbolicTarget target, unsigned n, std::vector<SymbolicTerm> terms)
    : target_(target), n_(n), terms_(std::move(terms)) {}

BigRational SymbolicExpansion::coefficient(std::span<const std::uint32_t> k) const {
  std::size_t len = k.size();
  while (len > 0 && k[len - 1] == 0) --len;
  for (const auto& term : terms_) {
    const auto tk = term.k.k();
    std::size_t tlen = tk.size();
    while (tlen > 0 && tk[tlen - 1] == 0) --tlen;
    if (tlen == len && std::equal(tk.begin(), tk.begin() + static_cast<std::ptrdiff_t>(len), k.begin())) {
      return term.coeff;
    }
  }
  return BigRational(0);
}

BigReal SymbolicExpansion::evaluate(std::span<const BigReal> variables, Bits bits) const {
  BigReal sum(bits);
  for (const auto& term : terms_) {
    BigReal mono(term.coeff, bits);
    for (std::size_t i = 0; i < term.k.size(); ++i) {
      if (term.k[i] == 0) continue;
      if (i >= variables.size()) throw TableError("expansion needs variable x_" + std::to_string(i));
      mono *= pow(BigReal(variables[i], bits), term.k[i]);
    }
    sum += mono;
  }
  return sum;
}

std::string SymbolicExpansion::to_json() const {
  nlohmann::ordered_json doc;
  doc["target"] = to_string(target_);
  doc["n"] = n_;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& term : terms_) {
    nlohmann::ordered_json t;
    t["k"] = std::vector<std::uint32_t>(term.k.k().begin(), term.k.k().end());
    t["coeff"] = term.coeff.to_string();
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

std::string SymbolicExpansion::to_csv() const {
  std::string out = "# target=" + to_string(target_) + "\n# n=" + std::to_string(n_) + "\nk,coeff\n";
  for (const auto& term : terms_) {
    for (std::size_t i = 0; i < term.k.size(); ++i) {
      if (i > 0) out += ';';
      out += std::to_string(term.k[i]);
    }
    out += ',' + term.coeff.to_string() + '\n';
  }
  return out;
}

SymbolicExpansion SymbolicExpansion::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid expansion JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("target") || !doc.contains("n") || !doc.contains("terms") ||
      !doc["terms"].is_array() || !doc["n"].is_number_unsigned()) {
    throw FormatError("expansion JSON needs target, n and terms");
  }
  std::vector<SymbolicTerm> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("k") || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw FormatError("malformed expansion term");
    }
    std::vector<std::uint32_t> k;
    for (const auto& ki : t["k"]) {
      if (!ki.is_number_unsigned()) throw FormatError("multiplicities must be nonnegative integers");
      k.push_back(ki.get<std::uint32_t>());
    }
    terms.push_back({MultiplicityVector(std::move(k)), BigRational::parse(t["coeff"].get<std::string>())});
  }
  return SymbolicExpansion(parse_symbolic_target(doc["target"].get<std::string>()), doc["n"].get<unsigned>(),
                           std::move(terms));
}

}  // namespace zl

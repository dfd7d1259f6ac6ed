#include "icl/serialize.hpp"

#include <algorithm>
#include <cmath>

#include "icl/errors.hpp"

namespace icl {

Rational parse_rational(const std::string& text) {
  if (text.empty() || text.find_first_not_of("-0123456789/") != std::string::npos ||
      std::count(text.begin(), text.end(), '/') > 1) {
    throw InvalidInput("not a rational: '" + text + "'");
  }
  Rational value;
  if (value.set_str(text, 10) != 0 || value.get_den() == 0) throw InvalidInput("not a rational: '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_decimal(const Rational& value, int digits) {
  if (value == 0) return "0";
  Rational a = abs(value);
  auto pow10 = [](long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return p;
  };
  auto scaled = [&](long s) -> Rational {
    if (s >= 0) return a * Rational(pow10(s));
    return a / Rational(pow10(s));
  };
  // exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(std::floor(std::log10(a.get_d())));
  while (scaled(-e) >= 10) ++e;
  while (scaled(-e) < 1) --e;
  long shift = digits - 1 - e;
  auto round_half_up = [](const Rational& x) {
    BigInt q = (x.get_num() * 2 + x.get_den()) / (x.get_den() * 2);
    return q;
  };
  BigInt n = round_half_up(scaled(shift));
  if (n == pow10(digits)) {
    ++e;
    --shift;
    n = round_half_up(scaled(shift));
  }
  std::string ds = n.get_str();
  std::string out = value < 0 ? "-" : "";
  if (e >= 0) {
    if (static_cast<long>(ds.size()) <= e + 1) {
      out += ds + std::string(static_cast<std::size_t>(e + 1 - static_cast<long>(ds.size())), '0');
    } else {
      out += ds.substr(0, static_cast<std::size_t>(e + 1)) + "." + ds.substr(static_cast<std::size_t>(e + 1));
    }
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  return out;
}

Json to_json(const GfMatrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    data.push_back(std::move(row));
  }
  return Json{{"q", m.field().q()}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

GfMatrix matrix_from_json(const Json& j) {
  try {
    const PrimeField field(j.at("q").get<std::uint32_t>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (data.size() != rows) throw InvalidInput("matrix: row count mismatch");
    std::vector<std::uint64_t> flat;
    for (const auto& row : data) {
      if (row.size() != cols) throw InvalidInput("matrix: column count mismatch");
      for (const auto& v : row) {
        const auto x = v.get<std::uint64_t>();
        if (x >= field.q()) throw InvalidInput("matrix: entry not reduced mod q");
        flat.push_back(x);
      }
    }
    return GfMatrix(field, rows, cols, flat);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matrix json: ") + e.what());
  }
}

Json to_json(const VerificationReport& report) {
  Json users = Json::array();
  for (const auto& u : report.per_user) {
    users.push_back({{"own_rank", u.own_rank},
                     {"interference_rank", u.interference_rank},
                     {"joint_rank", u.joint_rank},
                     {"decodable", u.decodable}});
  }
  return Json{{"valid", report.valid}, {"failing_users", report.failing_users}, {"per_user", users}};
}

Json to_json(const IndexCode& code) {
  Json blocks = Json::array();
  for (const auto& b : code.user_blocks) blocks.push_back({b.start, b.width});
  Json meta{{"scheme", code.scheme}, {"attempts", code.attempts}};
  meta["seed"] = code.seed ? Json(*code.seed) : Json(nullptr);
  meta["coloring"] = code.coloring;
  const Rational rate = code.broadcast_rate();
  return Json{{"field", code.field().q()},
              {"matrix", to_json(code.code_matrix)},
              {"blocks", blocks},
              {"message_len", code.message_len},
              {"rate", to_string(rate)},
              {"rate_decimal", to_decimal(rate)},
              {"bit_rate", code.bit_rate()},
              {"construction", meta}};
}

IndexCode index_code_from_json(const Json& j) {
  try {
    GfMatrix matrix = matrix_from_json(j.at("matrix"));
    if (j.at("field").get<std::uint32_t>() != matrix.field().q())
      throw InvalidInput("code: field disagrees with matrix");
    IndexCode code{std::move(matrix), {}, j.at("message_len").get<std::size_t>(), "", std::nullopt, 1, {}};
    for (const auto& b : j.at("blocks")) {
      if (!b.is_array() || b.size() != 2) throw InvalidInput("code: block must be [start, width]");
      code.user_blocks.push_back({b[0].get<std::size_t>(), b[1].get<std::size_t>()});
    }
    if (code.message_len == 0) throw InvalidInput("code: message_len must be positive");
    if (j.contains("construction")) {
      const auto& meta = j["construction"];
      code.scheme = meta.value("scheme", "");
      code.attempts = meta.value("attempts", std::size_t{1});
      if (meta.contains("seed") && !meta["seed"].is_null()) code.seed = meta["seed"].get<std::uint64_t>();
      if (meta.contains("coloring")) code.coloring = meta["coloring"].get<std::vector<std::vector<std::size_t>>>();
    }
    if (j.contains("rate") && parse_rational(j["rate"].get<std::string>()) != code.broadcast_rate())
      throw InvalidInput("code: rate field disagrees with dimensions");
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("code json: ") + e.what());
  }
}

Json to_json(const ProperColoring& c) {
  return Json{{"num_colors", c.num_colors}, {"color_of", c.color_of}};
}

Json to_json(const LocalColoring& c) {
  return Json{{"num_colors", c.base.num_colors},
              {"local_value", c.local_value},
              {"color_of", c.base.color_of}};
}

namespace {
Json sets_json(const std::vector<VertexMask>& sets) {
  Json out = Json::array();
  for (VertexMask s : sets) out.push_back(mask_to_vertices(s));
  return out;
}
}  // namespace

Json to_json(const FractionalSolution& sol) {
  Json weights = Json::array();
  for (std::size_t i = 0; i < sol.family.sets.size(); ++i) {
    if (sol.weight_of[i] == 0) continue;
    weights.push_back({{"set", mask_to_vertices(sol.family.sets[i])}, {"weight", to_string(sol.weight_of[i])}});
  }
  return Json{{"objective", to_string(sol.objective)},
              {"maximal_sets_only", sol.family.maximal_only},
              {"family_size", sol.family.sets.size()},
              {"weights", weights}};
}

Json to_json(const RFoldColoring& c) {
  return Json{{"r", c.r}, {"local_value", c.local_value}, {"colors_of", c.colors_of}};
}

Json to_json(const IntegerCover& cover) {
  return Json{{"r", cover.r}, {"s", cover.s}, {"p", cover.sets.size()}, {"max_load", cover.max_load},
              {"sets", sets_json(cover.sets)}};
}

Json to_json(const RatioReport& report) {
  return Json{{"r", report.params.r},
              {"m", report.params.m},
              {"k", report.params.k},
              {"num_vertices", report.num_vertices.get_str()},
              {"alpha", report.alpha.value.get_str()},
              {"alpha_exact", report.alpha.exact},
              {"alpha_argmax_p", report.alpha.argmax_p},
              {"chi_f", to_string(report.chi_f)},
              {"chi_f_is_upper_bound", !report.alpha.exact},
              {"chi_local", report.chi_local},
              {"ratio", to_string(report.ratio)},
              {"ratio_decimal", to_decimal(report.ratio, 12)},
              {"bound", to_decimal(Rational(multiplicative_bound()), 12)},
              {"bound_ok", report.bound_ok}};
}

Json invariant_json(const std::string& name, const Rational& value, const Json& witness, bool exact) {
  return Json{{"invariant", name},
              {"value", to_string(value)},
              {"decimal", to_decimal(value)},
              {"exact", exact},
              {"witness", witness}};
}

}  // namespace icl

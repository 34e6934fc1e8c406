#include "nanospin/serialization.hpp"

#include "nanospin/errors.hpp"

namespace nanospin {

nlohmann::json to_json(const CSDensityMatrix& m) {
  return {{"p", std::vector<double>(m.params().begin(), m.params().end())}};
}

CSDensityMatrix cs_from_json(const nlohmann::json& j) {
  const auto& p = j.at("p");
  if (!p.is_array() || p.size() != 7) throw UsageError("CS matrix JSON needs \"p\" with 7 reals");
  CSDensityMatrix::Params params{};
  for (std::size_t i = 0; i < 7; ++i) params[i] = p[i].get<double>();
  return CSDensityMatrix(params);
}

nlohmann::json to_json(const DensityMatrix4& rho) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.push_back({rho(i, j).real(), rho(i, j).imag()});
  return out;
}

DensityMatrix4 density_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 16)
    throw UsageError("density matrix JSON needs 16 [re, im] pairs");
  Matrix4c m;
  for (int k = 0; k < 16; ++k) {
    const auto& entry = j[static_cast<std::size_t>(k)];
    if (!entry.is_array() || entry.size() != 2) throw UsageError("entry must be [re, im]");
    m(k / 4, k % 4) = Complex{entry[0].get<double>(), entry[1].get<double>()};
  }
  return DensityMatrix4(m);
}

nlohmann::json to_json(const ConcurrenceResult& r) {
  return {{"lambdas", r.lambdas},
          {"concurrence", r.concurrence},
          {"entanglement_of_formation", r.entanglement_of_formation}};
}

nlohmann::json to_json(const DiscordResult& r) {
  return {{"mutual_information", r.mutual_information},
          {"classical_correlation", r.classical_correlation},
          {"discord", r.discord},
          {"theta", r.optimum.theta},
          {"phi", r.optimum.phi}};
}

}  // namespace nanospin

#include "ftspan/spanner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ftspan {

void Claim::validate() const {
  if (alpha < 1 || beta < 0 || faults < 0)
    throw std::invalid_argument("claim: alpha >= 1, beta >= 0, faults >= 0");
  if ((kind == FaultKind::None) != (faults == 0))
    throw std::invalid_argument("claim: faults == 0 iff kind == none");
}

std::string Claim::describe() const {
  std::ostringstream os;
  os << '(' << alpha << ',' << beta << ',' << faults << ','
     << to_string(kind) << ')';
  return os.str();
}

Spanner::Spanner(GraphPtr host, std::vector<int> edge_ids, Claim claim,
                 std::string provenance)
    : host_(std::move(host)),
      ids_(std::move(edge_ids)),
      claim_(claim),
      provenance_(std::move(provenance)) {
  if (!host_) throw std::invalid_argument("spanner: null host");
  claim_.validate();
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  mask_.assign(host_->num_edges(), 0);
  for (int id : ids_) {
    if (id < 0 || id >= host_->num_edges())
      throw std::invalid_argument("spanner: edge id out of range");
    mask_[id] = 1;
  }
}

Spanner Spanner::merged_with(const Spanner& other, Claim claim,
                             std::string provenance) const {
  if (host_->hash() != other.host_->hash())
    throw std::invalid_argument("spanner union: mismatched hosts");
  std::vector<int> ids = ids_;
  ids.insert(ids.end(), other.ids_.begin(), other.ids_.end());
  return Spanner(host_, std::move(ids), claim, std::move(provenance));
}

std::string Spanner::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "ftspan-spanner-v1";
  j["host_hash"] = host_->hash_hex();
  j["n"] = host_->num_vertices();
  j["m"] = host_->num_edges();
  j["edge_ids"] = ids_;
  j["claim"] = {{"alpha", claim_.alpha},
                {"beta", claim_.beta},
                {"faults", claim_.faults},
                {"kind", to_string(claim_.kind)}};
  j["provenance"] = provenance_;
  return j.dump(2) + "\n";
}

Spanner Spanner::from_json(const std::string& text, GraphPtr host) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "ftspan-spanner-v1")
    throw std::runtime_error("spanner json: unknown format");
  if (j.at("host_hash").get<std::string>() != host->hash_hex())
    throw std::runtime_error("spanner json: host hash mismatch");
  if (j.at("n").get<int>() != host->num_vertices() ||
      j.at("m").get<int>() != host->num_edges())
    throw std::runtime_error("spanner json: host shape mismatch");
  Claim c;
  c.alpha = j.at("claim").at("alpha").get<int>();
  c.beta = j.at("claim").at("beta").get<int>();
  c.faults = j.at("claim").at("faults").get<int>();
  c.kind = fault_kind_from_string(j.at("claim").at("kind").get<std::string>());
  return Spanner(std::move(host), j.at("edge_ids").get<std::vector<int>>(), c,
                 j.value("provenance", ""));
}

std::vector<std::vector<int>> Clustering::members() const {
  std::vector<std::vector<int>> out(center_of.size());
  for (int v = 0; v < static_cast<int>(cluster_of.size()); ++v)
    if (cluster_of[v] >= 0) out[cluster_of[v]].push_back(v);
  return out;
}

void Clustering::validate(const Graph& g) const {
  if (static_cast<int>(cluster_of.size()) != g.num_vertices())
    throw std::invalid_argument("clustering: size mismatch with host");
  const int k = num_clusters();
  for (int v = 0; v < g.num_vertices(); ++v)
    if (cluster_of[v] < -1 || cluster_of[v] >= k)
      throw std::invalid_argument("clustering: cluster id out of range");
  for (int c = 0; c < k; ++c) {
    const int ctr = center_of[c];
    if (ctr < 0 || ctr >= g.num_vertices() || cluster_of[ctr] != c)
      throw std::invalid_argument(
          "clustering: center must belong to its own cluster");
  }
}

}  // namespace ftspan

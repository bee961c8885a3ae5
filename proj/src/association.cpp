#include "vhetsim/association.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vhetsim {

AssociationMatrix::AssociationMatrix(int n_users, int n_bs)
    : n_users_(n_users),
      n_bs_(n_bs),
      serving_(static_cast<std::size_t>(n_users), -1),
      column_sums_(static_cast<std::size_t>(n_bs), 0) {
  if (n_users < 0 || n_bs <= 0) {
    throw std::invalid_argument("AssociationMatrix: invalid dimensions");
  }
}

void AssociationMatrix::assign(int user, int bs) {
  if (user < 0 || user >= n_users_ || bs < 0 || bs >= n_bs_) {
    throw std::out_of_range("AssociationMatrix::assign: index out of range");
  }
  auto& slot = serving_[static_cast<std::size_t>(user)];
  if (slot != -1) {
    throw std::logic_error(
        "AssociationMatrix::assign: user already has a serving station");
  }
  slot = bs;
  ++column_sums_[static_cast<std::size_t>(bs)];
  ++served_count_;
}

AssociationResult associate_users(const LinkTable& links,
                                  const std::vector<int>& active_bs,
                                  const CapacityVector& capacities,
                                  double sensitivity_dbm,
                                  AssociationRule rule) {
  if (static_cast<int>(capacities.size()) != links.n_bs) {
    throw std::invalid_argument(
        "associate_users: capacities must cover every base station");
  }
  for (const int b : active_bs) {
    if (b < 0 || b >= links.n_bs) {
      throw std::invalid_argument(
          "associate_users: active station id out of range");
    }
  }

  AssociationResult result;
  result.matrix = AssociationMatrix(links.n_users, links.n_bs);
  CapacityVector remaining = capacities;

  for (int u = 0; u < links.n_users; ++u) {
    // Active stations that clear the sensitivity floor, best SINR first.
    // SINR is monotone in received power for a fixed slot, so sorting by
    // power (descending), station id ascending on ties, gives the SINR order
    // with the lower-id tie-break.
    std::vector<int> candidates;
    candidates.reserve(active_bs.size());
    for (const int b : active_bs) {
      if (links.rx_dbm_at(u, b) >= sensitivity_dbm) candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const double ra = links.rx_mw_at(u, a);
      const double rb = links.rx_mw_at(u, b);
      if (ra != rb) return ra > rb;
      return a < b;
    });

    bool assigned = false;
    for (std::size_t rank = 0; rank < candidates.size(); ++rank) {
      const int b = candidates[rank];
      if (remaining[static_cast<std::size_t>(b)] <= 0) {
        if (rule == AssociationRule::argmax_or_outage) break;
        continue;  // cascade to the next-best qualifying station
      }
      result.matrix.assign(u, b);
      --remaining[static_cast<std::size_t>(b)];
      assigned = true;
      break;
    }
    if (!assigned) result.unserved.push_back(u);
  }
  return result;
}

std::vector<double> loads_from_association(const AssociationMatrix& matrix,
                                           std::span<const int> total_channels) {
  if (static_cast<int>(total_channels.size()) != matrix.n_bs()) {
    throw std::invalid_argument(
        "loads_from_association: channel counts must cover every station");
  }
  std::vector<double> loads(total_channels.size(), 0.0);
  for (std::size_t b = 0; b < total_channels.size(); ++b) {
    if (total_channels[b] <= 0) {
      throw std::invalid_argument(
          "loads_from_association: total channels must be > 0");
    }
    const int assigned = matrix.column_sum(static_cast<int>(b));
    if (assigned > total_channels[b]) {
      throw std::logic_error(
          "loads_from_association: assignment exceeds station capacity");
    }
    loads[b] = static_cast<double>(assigned) / total_channels[b];
  }
  return loads;
}

int haps_available_capacity(double lambda, int total_channels) {
  if (std::isnan(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument(
        "haps_available_capacity: lambda must be in [0, 1]");
  }
  if (total_channels <= 0) {
    throw std::invalid_argument(
        "haps_available_capacity: total channels must be > 0");
  }
  // Guard against representation error in lambda * total (e.g. 0.7 * 250)
  // flooring one channel low.
  return static_cast<int>(std::floor(lambda * total_channels + 1e-9));
}

}  // namespace vhetsim

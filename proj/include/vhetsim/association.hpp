#ifndef VHETSIM_ASSOCIATION_HPP
#define VHETSIM_ASSOCIATION_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace vhetsim {

// Per-slot link measurements: received power from every base station at every
// user, independent of which stations end up switched on. Row-major by user.
struct LinkTable {
  int n_users = 0;
  int n_bs = 0;
  std::vector<double> rx_dbm;
  std::vector<double> rx_mw;
  std::vector<std::uint8_t> los;  // diagnostic: large-scale state per link

  double rx_dbm_at(int user, int bs) const {
    return rx_dbm[static_cast<std::size_t>(user) *
                      static_cast<std::size_t>(n_bs) +
                  static_cast<std::size_t>(bs)];
  }
  double rx_mw_at(int user, int bs) const {
    return rx_mw[static_cast<std::size_t>(user) *
                     static_cast<std::size_t>(n_bs) +
                 static_cast<std::size_t>(bs)];
  }
};

// Binary user-to-station assignment with at most one serving station per
// user. Stored as a serving index per user plus per-station counts; the
// matrix view is available through entry().
class AssociationMatrix {
 public:
  AssociationMatrix() = default;
  AssociationMatrix(int n_users, int n_bs);

  void assign(int user, int bs);

  int serving(int user) const { return serving_[static_cast<std::size_t>(user)]; }
  bool entry(int user, int bs) const { return serving(user) == bs; }
  bool served(int user) const { return serving(user) >= 0; }
  int row_sum(int user) const { return served(user) ? 1 : 0; }
  int column_sum(int bs) const { return column_sums_[static_cast<std::size_t>(bs)]; }
  int served_count() const { return served_count_; }
  int n_users() const { return n_users_; }
  int n_bs() const { return n_bs_; }

 private:
  int n_users_ = 0;
  int n_bs_ = 0;
  int served_count_ = 0;
  std::vector<int> serving_;      // -1 when unserved
  std::vector<int> column_sums_;
};

using CapacityVector = std::vector<int>;

// What to do when a user's best active station has no free channel:
// cascade to the next-best qualifying station, or declare outage outright.
enum class AssociationRule { cascade, argmax_or_outage };

struct AssociationResult {
  AssociationMatrix matrix;
  std::vector<int> unserved;  // user ids, ascending
};

// Greedy SINR-maximizing association over the active stations, in ascending
// user order. A station qualifies for a user when its received power clears
// `sensitivity_dbm` and it still has free channels; ties in SINR go to the
// lower station index. Within one slot the interference term is common to
// every candidate, so the SINR order is the received-power order and no
// noise figure is needed here. `capacities` is indexed by station id.
AssociationResult associate_users(const LinkTable& links,
                                  const std::vector<int>& active_bs,
                                  const CapacityVector& capacities,
                                  double sensitivity_dbm,
                                  AssociationRule rule = AssociationRule::cascade);

// Per-station load: assigned channels over total channels.
std::vector<double> loads_from_association(const AssociationMatrix& matrix,
                                           std::span<const int> total_channels);

// Channels the aerial station has free for this network: floor(lambda * total).
int haps_available_capacity(double lambda, int total_channels);

}  // namespace vhetsim

#endif  // VHETSIM_ASSOCIATION_HPP

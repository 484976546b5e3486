#include "mapda/scheme.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mapda {

bool CacheState::contains(PacketId id) const {
  return std::binary_search(packets.begin(), packets.end(), id);
}

std::vector<CacheState> place(const CodedArray& a, std::int64_t files) {
  if (files < 1) {
    throw std::invalid_argument("place: file count must be >= 1, got " + std::to_string(files));
  }
  std::vector<CacheState> caches(a.cols());
  for (std::int64_t k = 0; k < a.cols(); ++k) {
    CacheState& cache = caches[k];
    cache.user = k + 1;
    for (std::int64_t f = 0; f < a.rows(); ++f) {
      if (a.is_star(f, k)) {
        cache.cached_rows.push_back(f + 1);
      }
    }
    cache.packets.reserve(cache.cached_rows.size() * files);
    for (std::int64_t n = 1; n <= files; ++n) {
      for (const std::int64_t f : cache.cached_rows) {
        cache.packets.push_back(PacketId{n, f});
      }
    }
  }
  return caches;
}

DeliveryPlan plan_delivery(const CodedArray& a, const std::vector<std::int64_t>& demands,
                           std::int64_t files) {
  if (files < 1) {
    throw std::invalid_argument("plan_delivery: file count must be >= 1, got " +
                                std::to_string(files));
  }
  if (static_cast<std::int64_t>(demands.size()) != a.cols()) {
    throw std::invalid_argument("plan_delivery: " + std::to_string(a.cols()) +
                                " users need " + std::to_string(a.cols()) + " demands, got " +
                                std::to_string(demands.size()));
  }
  for (std::size_t k = 0; k < demands.size(); ++k) {
    if (demands[k] < 1 || demands[k] > files) {
      throw std::invalid_argument("plan_delivery: demand of user " + std::to_string(k + 1) +
                                  " is " + std::to_string(demands[k]) + ", valid range is 1.." +
                                  std::to_string(files));
    }
  }

  const auto occ = block_occurrences(a);
  // Delivery reads each block's users off distinct columns.
  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    for (std::size_t i = 0; i < occ[s0].size(); ++i) {
      for (std::size_t j = i + 1; j < occ[s0].size(); ++j) {
        if (occ[s0][i].col == occ[s0][j].col) {
          throw ValidationError(Violation::column_repeat,
                                "integer " + std::to_string(s0 + 1) +
                                    " occurs twice in column " + std::to_string(occ[s0][i].col),
                                {occ[s0][i], occ[s0][j]}, static_cast<std::int64_t>(s0 + 1));
        }
      }
    }
  }

  DeliveryPlan plan;
  plan.users = a.cols();
  plan.packets = a.rows();
  plan.stars = (a.grid().col(0).array() == Entry::kStarCode).count();
  plan.files = files;
  plan.demands = demands;
  plan.blocks.reserve(occ.size());

  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    std::vector<Position> by_user = occ[s0];
    std::sort(by_user.begin(), by_user.end(),
              [](Position x, Position y) { return x.col < y.col; });

    BlockPlan block;
    block.block = static_cast<std::int64_t>(s0 + 1);
    for (const Position p : by_user) {
      block.users.push_back(p.col);
      block.packet_rows.push_back(p.row);
    }
    for (std::size_t i = 0; i < by_user.size(); ++i) {
      std::vector<std::int64_t> group;
      const std::int64_t row = by_user[i].row - 1;
      for (const std::int64_t user : block.users) {
        if (!a.is_star(row, user - 1)) {
          group.push_back(user);
        }
      }
      block.interference.push_back(std::move(group));
      plan.min_antennas = std::max(
          plan.min_antennas, static_cast<std::int64_t>(block.interference.back().size()));
    }
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

PlanCheck verify_plan(const DeliveryPlan& plan, const std::vector<CacheState>& caches) {
  PlanCheck check;
  auto fail = [&check](std::string issue) {
    check.ok = false;
    check.issues.push_back(std::move(issue));
  };

  if (static_cast<std::int64_t>(caches.size()) != plan.users) {
    fail("plan covers " + std::to_string(plan.users) + " users but " +
         std::to_string(caches.size()) + " caches were given");
    return check;
  }
  if (static_cast<std::int64_t>(plan.demands.size()) != plan.users) {
    fail("plan carries " + std::to_string(plan.demands.size()) + " demands for " +
         std::to_string(plan.users) + " users");
    return check;
  }

  // (user, packet row) pairs served across all blocks; must equal the
  // uncached pairs exactly, each exactly once.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> served;
  std::int64_t served_total = 0;

  for (const BlockPlan& block : plan.blocks) {
    const auto size = static_cast<std::int64_t>(block.users.size());
    if (size == 0) {
      fail("block " + std::to_string(block.block) + " serves no users");
      continue;
    }
    if (static_cast<std::int64_t>(block.packet_rows.size()) != size ||
        static_cast<std::int64_t>(block.interference.size()) != size) {
      fail("block " + std::to_string(block.block) + " has inconsistent lists");
      continue;
    }
    if (!std::is_sorted(block.users.begin(), block.users.end()) ||
        std::adjacent_find(block.users.begin(), block.users.end()) != block.users.end()) {
      fail("block " + std::to_string(block.block) + " users are not strictly ascending");
    }
    for (std::int64_t i = 0; i < size; ++i) {
      const std::int64_t user = block.users[i];
      const std::int64_t row = block.packet_rows[i];
      if (user < 1 || user > plan.users) {
        fail("block " + std::to_string(block.block) + " serves unknown user " +
             std::to_string(user));
        continue;
      }
      if (row < 1 || row > plan.packets) {
        fail("block " + std::to_string(block.block) + " delivers unknown row " +
             std::to_string(row));
        continue;
      }
      const CacheState& cache = caches[user - 1];
      if (std::binary_search(cache.cached_rows.begin(), cache.cached_rows.end(), row)) {
        fail("block " + std::to_string(block.block) + " delivers cached row " +
             std::to_string(row) + " to user " + std::to_string(user));
      }
      const auto& group = block.interference[i];
      if (std::find(group.begin(), group.end(), user) == group.end()) {
        fail("block " + std::to_string(block.block) + " interference group of user " +
             std::to_string(user) + " omits the user itself");
      }
      for (const std::int64_t other : group) {
        if (std::find(block.users.begin(), block.users.end(), other) == block.users.end()) {
          fail("block " + std::to_string(block.block) + " interference group of user " +
               std::to_string(user) + " names unserved user " + std::to_string(other));
          continue;
        }
        if (other < 1 || other > plan.users) {
          continue;
        }
        // Group membership asserts the cross term matters, which requires
        // the member to lack this packet row.
        const CacheState& member_cache = caches[other - 1];
        if (std::binary_search(member_cache.cached_rows.begin(),
                               member_cache.cached_rows.end(), row)) {
          fail("block " + std::to_string(block.block) + ": user " + std::to_string(other) +
               " caches row " + std::to_string(row) + " yet sits in user " +
               std::to_string(user) + "'s interference group");
        }
      }
      // Served users outside the group must cache this packet row: their
      // column has a star there, so the cross term is harmless.
      for (const std::int64_t other : block.users) {
        if (other < 1 || other > plan.users ||
            std::find(group.begin(), group.end(), other) != group.end()) {
          continue;
        }
        const CacheState& other_cache = caches[other - 1];
        if (!std::binary_search(other_cache.cached_rows.begin(), other_cache.cached_rows.end(),
                                row)) {
          fail("block " + std::to_string(block.block) + ": user " + std::to_string(other) +
               " neither caches row " + std::to_string(row) + " nor appears in user " +
               std::to_string(user) + "'s interference group");
        }
      }
      ++served[{user, row}];
      ++served_total;
    }
  }

  for (const auto& [pair, count] : served) {
    if (count > 1) {
      fail("user " + std::to_string(pair.first) + " receives row " +
           std::to_string(pair.second) + " " + std::to_string(count) + " times");
    }
  }
  for (const CacheState& cache : caches) {
    const auto cached = static_cast<std::int64_t>(cache.cached_rows.size());
    for (std::int64_t row = 1; row <= plan.packets; ++row) {
      const bool is_cached =
          std::binary_search(cache.cached_rows.begin(), cache.cached_rows.end(), row);
      const bool is_served = served.count({cache.user, row}) > 0;
      if (!is_cached && !is_served) {
        fail("user " + std::to_string(cache.user) + " never receives uncached row " +
             std::to_string(row));
      }
      if (is_cached && is_served) {
        fail("user " + std::to_string(cache.user) + " receives cached row " +
             std::to_string(row));
      }
    }
    if (cached != plan.stars) {
      fail("user " + std::to_string(cache.user) + " caches " + std::to_string(cached) +
           " rows, plan says " + std::to_string(plan.stars));
    }
  }

  const std::int64_t expected_total = plan.users * (plan.packets - plan.stars);
  if (served_total != expected_total) {
    fail("plan serves " + std::to_string(served_total) + " (user, row) pairs, expected " +
         std::to_string(expected_total));
  }
  return check;
}

std::string render_plan(const DeliveryPlan& plan) {
  std::string out = "plan users=" + std::to_string(plan.users) +
                    " packets=" + std::to_string(plan.packets) +
                    " stars=" + std::to_string(plan.stars) +
                    " files=" + std::to_string(plan.files) +
                    " blocks=" + std::to_string(plan.blocks.size()) +
                    " min-antennas=" + std::to_string(plan.min_antennas) + "\n";
  out += "demands";
  for (const std::int64_t d : plan.demands) {
    out += " " + std::to_string(d);
  }
  out += "\n";
  for (const BlockPlan& block : plan.blocks) {
    out += "block " + std::to_string(block.block) + "\n";
    out += "  users";
    for (const std::int64_t user : block.users) {
      out += " " + std::to_string(user);
    }
    out += "\n  rows";
    for (const std::int64_t row : block.packet_rows) {
      out += " " + std::to_string(row);
    }
    out += "\n  packets";
    for (std::size_t i = 0; i < block.users.size(); ++i) {
      out += " " + std::to_string(plan.demands[block.users[i] - 1]) + "," +
             std::to_string(block.packet_rows[i]);
    }
    out += "\n";
    for (std::size_t i = 0; i < block.users.size(); ++i) {
      out += "  interference " + std::to_string(block.users[i]) + ":";
      for (const std::int64_t other : block.interference[i]) {
        out += " " + std::to_string(other);
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace mapda

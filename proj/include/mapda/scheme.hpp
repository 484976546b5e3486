#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapda/coded_array.hpp"
#include "mapda/validate.hpp"

namespace mapda {

// One packet: piece `packet` of file `file`, both 1-based.
struct PacketId {
  std::int64_t file = 0;
  std::int64_t packet = 0;

  friend bool operator==(PacketId a, PacketId b) {
    return a.file == b.file && a.packet == b.packet;
  }
  friend bool operator<(PacketId a, PacketId b) {
    return a.file != b.file ? a.file < b.file : a.packet < b.packet;
  }
};

// Everything one user holds after placement: packet f of every file, for
// every starred row f of the user's column.
struct CacheState {
  std::int64_t user = 0;                 // 1-based
  std::vector<PacketId> packets;         // sorted
  std::vector<std::int64_t> cached_rows; // starred rows, ascending, 1-based

  bool contains(PacketId id) const;
};

// The transmission of one delivery block s: the users it serves in ascending
// order, the packet row delivered to each, and per served user the group of
// served users whose entry in that user's packet row is an integer (always
// including the user itself). Precoding must null this group's cross terms.
struct BlockPlan {
  std::int64_t block = 0;
  std::vector<std::int64_t> users;
  std::vector<std::int64_t> packet_rows;
  std::vector<std::vector<std::int64_t>> interference;
};

struct DeliveryPlan {
  std::int64_t users = 0;
  std::int64_t packets = 0;
  std::int64_t stars = 0;
  std::int64_t files = 0;
  std::int64_t min_antennas = 0;  // largest interference group
  std::vector<std::int64_t> demands;
  std::vector<BlockPlan> blocks;
};

struct PlanCheck {
  bool ok = true;
  std::vector<std::string> issues;
};

// Caches of all K users for N files: user k stores packet f of every file
// whenever row f of column k is a star.
std::vector<CacheState> place(const CodedArray& a, std::int64_t files);

// Delivery schedule read off the array: block s serves the users whose
// columns contain s, each with the packet row where s sits. The structure
// depends only on the array; demands (one file index per user, in [files])
// only select which file's packets travel.
DeliveryPlan plan_delivery(const CodedArray& a, const std::vector<std::int64_t>& demands,
                           std::int64_t files);

// Structural check of a finished plan against placement: block invariants,
// interference groups consistent with the caches, and every (user, uncached
// row) pair served exactly once across all blocks.
PlanCheck verify_plan(const DeliveryPlan& plan, const std::vector<CacheState>& caches);

std::string render_plan(const DeliveryPlan& plan);

}  // namespace mapda

#include "blockgraph/blocks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "blockgraph/errors.hpp"
#include "blockgraph/numtheory.hpp"

namespace blockgraph {

using u64 = std::uint64_t;

CentralCharacter central_character(const CharacterTable& t, std::size_t row) {
  if (row >= t.irr.size()) throw InvalidArgument("row index out of range");
  const Integer& degree = t.degree(row);
  CentralCharacter out;
  out.values.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    out.values.push_back((Cyclotomic(t.classes[k].size) * t.irr[row][k]).div_exact(degree));
  }
  return out;
}

std::vector<CentralCharacter> central_characters(const CharacterTable& t) {
  std::vector<CentralCharacter> out;
  out.reserve(t.irr.size());
  for (std::size_t i = 0; i < t.irr.size(); ++i) out.push_back(central_character(t, i));
  return out;
}

BlockPartition block_partition(const CharacterTable& t, const std::vector<CentralCharacter>& omega,
                               const ReductionContext& ctx) {
  const u64 p = ctx.p();
  // Exact comparison of fingerprints; std::map keeps the grouping deterministic.
  std::map<std::vector<FiniteFieldElt>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    std::vector<FiniteFieldElt> fingerprint;
    fingerprint.reserve(omega[i].values.size());
    for (const auto& w : omega[i].values) fingerprint.push_back(ctx.reduce(w));
    groups[std::move(fingerprint)].push_back(i);
  }
  BlockPartition out;
  out.prime = p;
  for (auto& [key, rows] : groups) out.blocks.push_back(std::move(rows));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.block_of.assign(omega.size(), 0);
  const unsigned full = nt::valuation(t.order, p);
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    unsigned lowest = full;
    for (std::size_t row : out.blocks[b]) {
      out.block_of[row] = b;
      lowest = std::min(lowest, nt::valuation(t.degree(row), p));
    }
    out.defects.push_back(full - lowest);
  }
  out.principal_index = out.block_of.at(0);
  return out;
}

BlockPartition block_partition(const CharacterTable& t, u64 p) {
  return block_partition(t, central_characters(t), ReductionContext::make(t.value_conductor(), p));
}

std::vector<std::size_t> principal_block_rows(const CharacterTable& t, u64 p) {
  return block_partition(t, p).principal();
}

std::map<u64, BlockPartition> block_partitions(const CharacterTable& t, const std::vector<u64>& primes,
                                               unsigned workers) {
  const auto omega = central_characters(t);
  const u64 conductor = t.value_conductor();
  std::vector<BlockPartition> results(primes.size());
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(primes.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        results[i] = block_partition(t, omega, ReductionContext::make(conductor, primes[i]));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::map<u64, BlockPartition> out;
  for (std::size_t i = 0; i < primes.size(); ++i) out.emplace(primes[i], std::move(results[i]));
  return out;
}

std::string partition_json(const BlockPartition& b) {
  nlohmann::ordered_json doc;
  doc["prime"] = b.prime;
  doc["blocks"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    nlohmann::ordered_json block;
    block["rows"] = b.blocks[i];
    block["defect"] = b.defects[i];
    block["principal"] = i == b.principal_index;
    doc["blocks"].push_back(std::move(block));
  }
  return doc.dump();
}

}  // namespace blockgraph

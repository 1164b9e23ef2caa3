#pragma once

#include "ajq/model.hpp"
#include "ajq/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ajq {

enum class PolicyId {
    Fifo,   // earliest arrival to the server queue
    Lifo,   // latest arrival to the server queue
    Lis,    // earliest job injection time
    Ntg,    // smallest distance to go
    Ffs,    // largest distance from source
    LctLis, // longest processing time, then earliest injection
    SadNfs, // smallest activation delay, then nearest from source
};

constexpr PolicyId all_policies[] = {PolicyId::Fifo, PolicyId::Lifo,   PolicyId::Lis,
                                     PolicyId::Ntg,  PolicyId::Ffs,    PolicyId::LctLis,
                                     PolicyId::SadNfs};

/// Case-insensitive; accepts the canonical names FIFO, LIFO, LIS, NTG, FFS,
/// LCT-LIS, SAD-NFS.
std::optional<PolicyId> parse_policy(std::string_view name);
std::string_view policy_name(PolicyId policy);

/// One active task as seen by a scheduling policy.
struct QueueEntry {
    Rational injected_at;       // job injection time
    std::uint64_t job_seq = 0;  // job injection sequence number
    Rational activated_at;      // instant the task entered the active queue
    Rational activation_delay;
    Rational processing_time;
    int layer = 0;      // λ(K,i)
    int job_layers = 0; // λ_K
    int task_id = 0;
    std::uint64_t instance_id = 0;
};

/// True iff `a` is served strictly before `b` under `policy`. The final
/// tie-breaker chain (injection time, injection sequence, task id) makes this
/// a strict total order on any valid queue.
bool serves_before(const QueueEntry& a, const QueueEntry& b, PolicyId policy);

/// Index of the entry the policy serves next. The view must be nonempty;
/// the result does not depend on the presentation order of the view.
std::size_t select(std::span<const QueueEntry> view, PolicyId policy);

/// λ(K,i) - 1. The job must be doable.
int distance_from_source(const JobSpec& job, int task_id);

/// λ_K - λ(K,i). The job must be doable.
int distance_to_go(const JobSpec& job, int task_id);

} // namespace ajq

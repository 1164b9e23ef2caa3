#pragma once

#include "ajq/graph.hpp"
#include "ajq/rational.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ajq {

using ServerId = std::string;

/// One task: the server it runs on, its activation delay and processing time.
struct TaskSpec {
    int id = 0; // 1-based index within the job
    ServerId server;
    Rational activation_delay; // >= 0
    Rational processing_time;  // > 0
};

/// OR-list of AND-sets of task ids. An empty inner set marks an initial task.
using FeasibilitySets = std::vector<std::vector<int>>;

/// Feasibility sets per task, indexed by task id - 1. Sets are kept verbatim:
/// duplicates and supersets are never minimized, so user modeling errors stay
/// visible.
using FeasibilityFunction = std::vector<FeasibilitySets>;

struct JobSpec {
    std::string name;
    std::vector<TaskSpec> tasks; // ids 1..n, in order
    FeasibilityFunction feasibility;

    int task_count() const { return static_cast<int>(tasks.size()); }
    const TaskSpec& task(int task_id) const { return tasks[task_id - 1]; }
    const FeasibilitySets& sets_of(int task_id) const { return feasibility[task_id - 1]; }

    /// Total processing time of this job's tasks assigned to `server`.
    Rational load_on(const ServerId& server) const;
    std::set<ServerId> servers_touched() const;
};

/// Result of the layer fixpoint. Tasks that cannot be assigned a layer are
/// listed in `unassigned`; the job is doable iff that list is empty.
struct LayerMap {
    std::vector<int> layer;      // by task id - 1; 0 = unassigned
    std::vector<int> unassigned; // task ids, ascending
    int layer_count = 0;         // highest assigned layer

    bool complete() const { return unassigned.empty(); }
    int layer_of(int task_id) const { return layer[task_id - 1]; }
};

/// Declared scenario-wide limits. Absent fields are unconstrained here;
/// scenario loading derives them from the trace instead.
struct Limits {
    std::optional<int> max_job_length; // L
    std::optional<Rational> t_min;
    std::optional<Rational> t_max;
    std::optional<Rational> d_max;
};

struct Violation {
    std::string job;
    int task_id = 0; // 0 = job-level
    std::string message;
};

std::string to_string(const Violation& v);

/// Structural validation: task parameter signs, server membership,
/// feasibility referential integrity, and declared limits.
std::vector<Violation> validate_job(const JobSpec& job, const std::set<ServerId>& servers,
                                    const Limits& limits = {});

/// Iterative layer closure: layer 1 holds tasks with an empty feasibility
/// set; layer j holds tasks newly feasible once layers 1..j-1 are treated as
/// completed. Stops when no task gains a layer. `passes`, when given,
/// receives the number of sweeps (at most task_count + 1).
LayerMap assign_layers(const JobSpec& job, int* passes = nullptr);

bool is_doable(const JobSpec& job);

using TaskGraph = Digraph<int>;
using ServerGraph = Digraph<ServerId>;

/// Dependence graph on task ids: edge (j, i) iff task j appears in some
/// feasibility set of task i.
TaskGraph skeleton(const JobSpec& job);

/// Skeleton mapped onto servers. Self-loops are kept: two dependent tasks on
/// one server yield one.
ServerGraph job_topology(const JobSpec& job);

/// Union of the topologies of all given jobs.
ServerGraph system_topology(std::span<const JobSpec> jobs);

/// Topological ordering of the server digraph if it is acyclic (self-loops
/// count as cycles); nullopt otherwise. Ties break by server identifier.
std::optional<std::vector<ServerId>> feed_forward_order(const ServerGraph& topology);

} // namespace ajq

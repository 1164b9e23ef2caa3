#include "ajq/model.hpp"

#include <algorithm>

namespace ajq {

Rational JobSpec::load_on(const ServerId& server) const {
    Rational total = 0;
    for (const auto& t : tasks)
        if (t.server == server)
            total += t.processing_time;
    return total;
}

std::set<ServerId> JobSpec::servers_touched() const {
    std::set<ServerId> out;
    for (const auto& t : tasks)
        out.insert(t.server);
    return out;
}

std::string to_string(const Violation& v) {
    std::string out = v.job.empty() ? std::string("job") : "job '" + v.job + "'";
    if (v.task_id > 0)
        out += " task " + std::to_string(v.task_id);
    out += ": " + v.message;
    return out;
}

std::vector<Violation> validate_job(const JobSpec& job, const std::set<ServerId>& servers,
                                    const Limits& limits) {
    std::vector<Violation> out;
    auto add = [&](int task_id, std::string message) {
        out.push_back({job.name, task_id, std::move(message)});
    };

    const int n = job.task_count();
    if (n < 1)
        add(0, "job must contain at least one task");
    if (limits.max_job_length && n > *limits.max_job_length)
        add(0, "job length " + std::to_string(n) + " exceeds declared limit L=" +
                   std::to_string(*limits.max_job_length));
    if (static_cast<int>(job.feasibility.size()) != n)
        add(0, "feasibility function must cover every task");

    for (int i = 0; i < n; ++i) {
        const TaskSpec& t = job.tasks[i];
        const int id = i + 1;
        if (t.id != id)
            add(id, "task id must equal its position in the task list");
        if (t.processing_time <= 0)
            add(id, "processing_time must be positive");
        if (t.activation_delay < 0)
            add(id, "activation_delay must be nonnegative");
        if (!servers.count(t.server))
            add(id, "unknown server '" + t.server + "'");
        if (limits.t_max && t.processing_time > *limits.t_max)
            add(id, "processing_time exceeds declared T_max");
        if (limits.t_min && t.processing_time < *limits.t_min)
            add(id, "processing_time below declared T_min");
        if (limits.d_max && t.activation_delay > *limits.d_max)
            add(id, "activation_delay exceeds declared D_max");
    }

    for (int i = 0; i < std::min<int>(n, static_cast<int>(job.feasibility.size())); ++i) {
        const int id = i + 1;
        for (const auto& fset : job.feasibility[i]) {
            for (int ref : fset) {
                if (ref < 1 || ref > n)
                    add(id, "feasibility set references unknown task " + std::to_string(ref));
                else if (ref == id)
                    add(id, "feasibility set contains its own task");
            }
        }
    }
    return out;
}

LayerMap assign_layers(const JobSpec& job, int* passes) {
    const int n = job.task_count();
    LayerMap map;
    map.layer.assign(n, 0);

    int sweeps = 0;
    int current = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        ++sweeps;
        ++current;
        for (int i = 0; i < n; ++i) {
            if (map.layer[i] != 0)
                continue;
            for (const auto& fset : job.feasibility[i]) {
                bool satisfied = true;
                for (int ref : fset) {
                    // Only tasks assigned in earlier sweeps count as completed.
                    if (ref < 1 || ref > n || map.layer[ref - 1] == 0 ||
                        map.layer[ref - 1] >= current) {
                        satisfied = false;
                        break;
                    }
                }
                if (satisfied) {
                    map.layer[i] = current;
                    map.layer_count = current;
                    changed = true;
                    break;
                }
            }
        }
    }
    if (passes)
        *passes = sweeps;
    for (int i = 0; i < n; ++i)
        if (map.layer[i] == 0)
            map.unassigned.push_back(i + 1);
    return map;
}

bool is_doable(const JobSpec& job) {
    return assign_layers(job).complete();
}

TaskGraph skeleton(const JobSpec& job) {
    TaskGraph graph;
    const int n = job.task_count();
    for (int id = 1; id <= n; ++id)
        graph.add_node(id);
    for (int i = 0; i < n; ++i)
        for (const auto& fset : job.feasibility[i])
            for (int ref : fset)
                if (ref >= 1 && ref <= n)
                    graph.add_edge(ref, i + 1);
    return graph;
}

ServerGraph job_topology(const JobSpec& job) {
    ServerGraph graph;
    for (const auto& t : job.tasks)
        graph.add_node(t.server);
    for (const auto& [from, to] : skeleton(job).edges)
        graph.add_edge(job.task(from).server, job.task(to).server);
    return graph;
}

ServerGraph system_topology(std::span<const JobSpec> jobs) {
    ServerGraph graph;
    for (const auto& job : jobs) {
        ServerGraph part = job_topology(job);
        graph.nodes.insert(part.nodes.begin(), part.nodes.end());
        graph.edges.insert(part.edges.begin(), part.edges.end());
    }
    return graph;
}

std::optional<std::vector<ServerId>> feed_forward_order(const ServerGraph& topology) {
    return topological_order(topology);
}

} // namespace ajq

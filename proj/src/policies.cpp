#include "ajq/policies.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ajq {

std::optional<PolicyId> parse_policy(std::string_view name) {
    std::string upper;
    upper.reserve(name.size());
    for (char c : name)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "FIFO")
        return PolicyId::Fifo;
    if (upper == "LIFO")
        return PolicyId::Lifo;
    if (upper == "LIS")
        return PolicyId::Lis;
    if (upper == "NTG")
        return PolicyId::Ntg;
    if (upper == "FFS")
        return PolicyId::Ffs;
    if (upper == "LCT-LIS")
        return PolicyId::LctLis;
    if (upper == "SAD-NFS")
        return PolicyId::SadNfs;
    return std::nullopt;
}

std::string_view policy_name(PolicyId policy) {
    switch (policy) {
    case PolicyId::Fifo:
        return "FIFO";
    case PolicyId::Lifo:
        return "LIFO";
    case PolicyId::Lis:
        return "LIS";
    case PolicyId::Ntg:
        return "NTG";
    case PolicyId::Ffs:
        return "FFS";
    case PolicyId::LctLis:
        return "LCT-LIS";
    case PolicyId::SadNfs:
        return "SAD-NFS";
    }
    return "?";
}

namespace {

// -1 when a precedes b on this key, +1 when b precedes a, 0 on a tie.
template <typename T>
int cmp_asc(const T& a, const T& b) {
    if (a < b)
        return -1;
    if (b < a)
        return 1;
    return 0;
}

int primary_cmp(const QueueEntry& a, const QueueEntry& b, PolicyId policy) {
    switch (policy) {
    case PolicyId::Fifo:
        return cmp_asc(a.activated_at, b.activated_at);
    case PolicyId::Lifo:
        return cmp_asc(b.activated_at, a.activated_at);
    case PolicyId::Lis:
        return cmp_asc(a.injected_at, b.injected_at);
    case PolicyId::Ntg:
        return cmp_asc(a.job_layers - a.layer, b.job_layers - b.layer);
    case PolicyId::Ffs:
        return cmp_asc(b.layer, a.layer);
    case PolicyId::LctLis:
        if (int c = cmp_asc(b.processing_time, a.processing_time); c != 0)
            return c;
        return cmp_asc(a.injected_at, b.injected_at);
    case PolicyId::SadNfs:
        if (int c = cmp_asc(a.activation_delay, b.activation_delay); c != 0)
            return c;
        return cmp_asc(a.layer, b.layer);
    }
    return 0;
}

} // namespace

bool serves_before(const QueueEntry& a, const QueueEntry& b, PolicyId policy) {
    if (int c = primary_cmp(a, b, policy); c != 0)
        return c < 0;
    if (int c = cmp_asc(a.injected_at, b.injected_at); c != 0)
        return c < 0;
    if (int c = cmp_asc(a.job_seq, b.job_seq); c != 0)
        return c < 0;
    return a.task_id < b.task_id;
}

std::size_t select(std::span<const QueueEntry> view, PolicyId policy) {
    if (view.empty())
        throw std::invalid_argument("select: empty queue view");
    std::size_t best = 0;
    for (std::size_t i = 1; i < view.size(); ++i)
        if (serves_before(view[i], view[best], policy))
            best = i;
    return best;
}

int distance_from_source(const JobSpec& job, int task_id) {
    LayerMap layers = assign_layers(job);
    if (!layers.complete())
        throw std::invalid_argument("distance_from_source: job is not doable");
    return layers.layer_of(task_id) - 1;
}

int distance_to_go(const JobSpec& job, int task_id) {
    LayerMap layers = assign_layers(job);
    if (!layers.complete())
        throw std::invalid_argument("distance_to_go: job is not doable");
    return layers.layer_count - layers.layer_of(task_id);
}

} // namespace ajq

#include "morita/parallel.hpp"

namespace morita {

namespace {
std::atomic<std::size_t> g_jobs{1};
}  // namespace

std::size_t default_jobs() noexcept { return g_jobs.load(); }
void set_default_jobs(std::size_t jobs) noexcept { g_jobs.store(jobs == 0 ? 1 : jobs); }

}  // namespace morita

#include "actors/runtime.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace actors {

struct ActorCell {
  enum class Status { Idle, Queued, Running };

  ActorId id;
  bool is_client = false;

  std::mutex mu;
  std::condition_variable cv;  // client receive wakeups
  std::deque<Envelope> mailbox;
  Status status = Status::Idle;
  bool stop_requested = false;
  bool halted = false;
  HaltReason reason = HaltReason::Normal;
  std::string crash_detail;
  std::vector<ActorId> observers;

  ErasedStep step;
  std::any state;
};

struct RuntimeState {
  Runtime::Options opts;

  mutable std::mutex reg_mu;
  std::unordered_map<std::uint64_t, std::shared_ptr<ActorCell>> cells;
  std::atomic<std::uint64_t> next_id{1};
  std::atomic<std::uint64_t> sent{0};
  std::atomic<std::int64_t> in_flight{0};  // accepted actor envelopes not yet processed
  std::atomic<std::size_t> live{0};
  std::atomic<bool> shut{false};

  std::mutex q_mu;
  std::condition_variable q_cv;
  std::deque<std::shared_ptr<ActorCell>> runq;
  bool workers_stop = false;
  std::vector<std::thread> workers;
  bool workers_joined = false;

  std::mutex quiesce_mu;
  std::condition_variable quiesce_cv;

  // --- helpers ---

  std::shared_ptr<ActorCell> find(ActorId id) const {
    std::lock_guard lock(reg_mu);
    auto it = cells.find(id.value);
    return it == cells.end() ? nullptr : it->second;
  }

  void push_runq(std::shared_ptr<ActorCell> cell) {
    {
      std::lock_guard lock(q_mu);
      runq.push_back(std::move(cell));
    }
    q_cv.notify_one();
  }

  void dec_in_flight(std::int64_t n) {
    if (in_flight.fetch_sub(n) == n) {
      std::lock_guard lock(quiesce_mu);
      quiesce_cv.notify_all();
    }
  }

  ActorId spawn(ErasedStep step, std::function<std::any(ActorId)> make_state) {
    if (shut.load()) throw RuntimeShutDown{};
    auto cell = std::make_shared<ActorCell>();
    cell->id = ActorId{next_id.fetch_add(1)};
    cell->step = std::move(step);
    cell->state = make_state(cell->id);
    {
      std::lock_guard lock(reg_mu);
      cells.emplace(cell->id.value, cell);
    }
    live.fetch_add(1);
    return cell->id;
  }

  void send(ActorId from, ActorId to, AnyMessage msg, bool internal) {
    if (!internal && shut.load()) throw RuntimeShutDown{};
    auto cell = find(to);
    if (!cell) throw UnknownRecipient{to};
    if (opts.trace) {
      opts.trace->line(from.str() + " send " + msg.debug() + " to " + to.str());
    }
    std::unique_lock lock(cell->mu);
    if (cell->halted) return;  // discard, mirrors throwing to a finished thread
    cell->mailbox.push_back(Envelope{from, std::move(msg)});
    sent.fetch_add(1);
    if (cell->is_client) {
      cell->cv.notify_all();
      return;
    }
    in_flight.fetch_add(1);
    if (cell->status == ActorCell::Status::Idle) {
      cell->status = ActorCell::Status::Queued;
      lock.unlock();
      push_runq(std::move(cell));
    }
  }

  void notify_halt(const std::shared_ptr<ActorCell>& cell, ActorId observer) {
    Fault f{Fault::Halted{cell->id, cell->reason, cell->crash_detail}};
    try {
      send(cell->id, observer, AnyMessage::of(std::move(f)), /*internal=*/true);
    } catch (const UnknownRecipient&) {
      // observer validity is checked at registration; nothing to do here
    }
  }

  // Caller holds cell->mu via `lock`; released on return.
  void halt(const std::shared_ptr<ActorCell>& cell,
            std::unique_lock<std::mutex>& lock, HaltReason why,
            std::string detail) {
    cell->halted = true;
    cell->reason = why;
    cell->crash_detail = std::move(detail);
    cell->status = ActorCell::Status::Idle;
    const auto discarded = cell->mailbox.size();
    cell->mailbox.clear();
    auto observers = std::move(cell->observers);
    cell->observers.clear();
    cell->cv.notify_all();
    lock.unlock();

    if (!cell->is_client && discarded > 0) {
      dec_in_flight(static_cast<std::int64_t>(discarded));
    }
    for (ActorId obs : observers) notify_halt(cell, obs);
    if (!cell->is_client) {
      live.fetch_sub(1);
      std::lock_guard g(quiesce_mu);
      quiesce_cv.notify_all();
    }
  }

  void stop(ActorId target) {
    auto cell = find(target);
    if (!cell) throw UnknownRecipient{target};
    std::unique_lock lock(cell->mu);
    if (cell->halted) return;
    if (cell->is_client) {
      halt(cell, lock, HaltReason::Stopped, {});
      return;
    }
    cell->stop_requested = true;
    if (cell->status == ActorCell::Status::Idle) {
      cell->status = ActorCell::Status::Queued;
      lock.unlock();
      push_runq(std::move(cell));
    }
  }

  void process(const std::shared_ptr<ActorCell>& cell);
  void worker_loop();
};

namespace {

class RuntimeContext final : public Context {
 public:
  RuntimeContext(RuntimeState& rt, ActorId self) : rt_(rt), self_(self) {}

  ActorId self() const override { return self_; }

  void send_any(ActorId to, AnyMessage message) override {
    rt_.send(self_, to, std::move(message), /*internal=*/false);
  }

  ActorId spawn_erased(ErasedStep step, std::any initial_state) override {
    return rt_.spawn(std::move(step), [s = std::move(initial_state)](ActorId) {
      return s;
    });
  }

  void stop(ActorId target) override { rt_.stop(target); }

  void emit(std::string line) override {
    if (rt_.opts.trace) rt_.opts.trace->line(std::move(line));
  }

 private:
  RuntimeState& rt_;
  ActorId self_;
};

}  // namespace

void RuntimeState::process(const std::shared_ptr<ActorCell>& cell) {
  RuntimeContext ctx(*this, cell->id);
  std::unique_lock lock(cell->mu);
  if (cell->halted) return;
  cell->status = ActorCell::Status::Running;
  // Yield the worker after a bounded batch so one busy actor cannot starve
  // the rest of the run queue.
  int budget = 64;
  for (;;) {
    if (cell->stop_requested) {
      halt(cell, lock, HaltReason::Stopped, {});
      return;
    }
    if (cell->mailbox.empty()) {
      cell->status = ActorCell::Status::Idle;
      return;
    }
    if (budget-- == 0) {
      cell->status = ActorCell::Status::Queued;
      lock.unlock();
      push_runq(cell);
      return;
    }
    Envelope env = std::move(cell->mailbox.front());
    cell->mailbox.pop_front();
    lock.unlock();

    bool crashed = false;
    std::string what;
    try {
      cell->step(cell->state, env, ctx);
    } catch (const std::exception& e) {
      crashed = true;
      what = e.what();
    } catch (...) {
      crashed = true;
      what = "unknown error";
    }
    dec_in_flight(1);

    lock.lock();
    if (crashed) {
      halt(cell, lock, HaltReason::Crashed, std::move(what));
      return;
    }
  }
}

void RuntimeState::worker_loop() {
  for (;;) {
    std::shared_ptr<ActorCell> cell;
    {
      std::unique_lock lock(q_mu);
      q_cv.wait(lock, [&] { return workers_stop || !runq.empty(); });
      if (runq.empty()) return;
      cell = std::move(runq.front());
      runq.pop_front();
    }
    process(cell);
  }
}

Runtime::Runtime() : Runtime(Options{}) {}

Runtime::Runtime(Options options) : state_(std::make_unique<RuntimeState>()) {
  register_fault_message_type();
  state_->opts = std::move(options);
  std::size_t n = state_->opts.workers;
  if (n == 0) n = std::max(2u, std::thread::hardware_concurrency());
  state_->workers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    state_->workers.emplace_back([rt = state_.get()] { rt->worker_loop(); });
  }
}

Runtime::~Runtime() { shutdown(); }

ActorId Runtime::spawn_erased(ErasedStep step, std::any initial_state) {
  return state_->spawn(std::move(step),
                       [s = std::move(initial_state)](ActorId) { return s; });
}

ActorId Runtime::spawn_erased_with(ErasedStep step,
                                   std::function<std::any(ActorId)> make_state) {
  return state_->spawn(std::move(step), std::move(make_state));
}

void Runtime::send_any(ActorId from, ActorId to, AnyMessage message) {
  state_->send(from, to, std::move(message), /*internal=*/false);
}

void Runtime::stop(ActorId target) { state_->stop(target); }

void Runtime::on_halt(ActorId target, ActorId observer) {
  if (!state_->find(observer)) throw UnknownRecipient{observer};
  auto cell = state_->find(target);
  if (!cell) throw UnknownRecipient{target};
  std::unique_lock lock(cell->mu);
  if (cell->halted) {
    lock.unlock();
    state_->notify_halt(cell, observer);
    return;
  }
  cell->observers.push_back(observer);
}

Client Runtime::make_client() {
  auto cell = std::make_shared<ActorCell>();
  cell->is_client = true;
  if (state_->shut.load()) throw RuntimeShutDown{};
  cell->id = ActorId{state_->next_id.fetch_add(1)};
  {
    std::lock_guard lock(state_->reg_mu);
    state_->cells.emplace(cell->id.value, cell);
  }
  Client client;
  client.cell_ = std::move(cell);
  return client;
}

void Runtime::shutdown() {
  auto& rt = *state_;
  rt.shut.store(true);

  std::vector<std::shared_ptr<ActorCell>> snapshot;
  {
    std::lock_guard lock(rt.reg_mu);
    snapshot.reserve(rt.cells.size());
    for (auto& [_, cell] : rt.cells) snapshot.push_back(cell);
  }
  for (auto& cell : snapshot) {
    std::unique_lock lock(cell->mu);
    if (cell->halted) continue;
    if (cell->is_client) {
      rt.halt(cell, lock, HaltReason::Stopped, {});
      continue;
    }
    cell->stop_requested = true;
    if (cell->status == ActorCell::Status::Idle) {
      cell->status = ActorCell::Status::Queued;
      lock.unlock();
      rt.push_runq(cell);
    }
  }
  {
    std::unique_lock lock(rt.quiesce_mu);
    rt.quiesce_cv.wait(lock, [&] { return rt.live.load() == 0; });
  }
  {
    std::lock_guard lock(rt.q_mu);
    if (rt.workers_joined) return;
    rt.workers_stop = true;
  }
  rt.q_cv.notify_all();
  for (auto& w : rt.workers) w.join();
  rt.workers.clear();
  {
    std::lock_guard lock(rt.q_mu);
    rt.workers_joined = true;
  }
}

bool Runtime::await_quiescence(std::chrono::milliseconds timeout) {
  auto& rt = *state_;
  std::unique_lock lock(rt.quiesce_mu);
  return rt.quiesce_cv.wait_for(lock, timeout,
                                [&] { return rt.in_flight.load() == 0; });
}

std::uint64_t Runtime::envelopes_sent() const { return state_->sent.load(); }

std::size_t Runtime::live_actors() const { return state_->live.load(); }

std::shared_ptr<TraceSink> Runtime::trace_sink() const {
  return state_->opts.trace;
}

ActorId Client::id() const { return cell_->id; }

std::optional<Envelope> Client::receive(std::chrono::milliseconds timeout) {
  std::unique_lock lock(cell_->mu);
  cell_->cv.wait_for(lock, timeout,
                     [&] { return !cell_->mailbox.empty() || cell_->halted; });
  if (cell_->mailbox.empty()) return std::nullopt;
  Envelope env = std::move(cell_->mailbox.front());
  cell_->mailbox.pop_front();
  return env;
}

}  // namespace actors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "actors/runtime.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ring/election.hpp"

using namespace ring;
using actors::AnyMessage;
using namespace std::chrono_literals;

namespace {

struct MockContext final : actors::Context {
  ActorId self_id;
  std::vector<std::pair<ActorId, AnyMessage>> sent;
  std::vector<std::string> emitted;

  explicit MockContext(ActorId id) : self_id(id) {}

  ActorId self() const override { return self_id; }
  void send_any(ActorId to, AnyMessage m) override {
    sent.emplace_back(to, std::move(m));
  }
  ActorId spawn_erased(actors::ErasedStep, std::any) override { return {}; }
  void stop(ActorId) override {}
  void emit(std::string line) override { emitted.push_back(std::move(line)); }
};

const Nominate* sent_nomination(const MockContext& ctx, std::size_t i) {
  const Msg* msg = ctx.sent.at(i).second.as<Msg>();
  return msg != nullptr ? std::get_if<Nominate>(msg) : nullptr;
}

ActorFactory basic_node_factory() {
  return [](actors::Runtime& rt) {
    return rt.spawn<NodeState, Msg>(node_intent, NodeState{Uninitialized{}});
  };
}

}  // namespace

TEST_CASE("node: Init wires the successor") {
  MockContext ctx(ActorId{10});
  NodeState next = node_intent(Uninitialized{}, {ActorId{1}, Msg{Init{ActorId{11}}}}, ctx);
  CHECK(std::get<Member>(next).next == ActorId{11});
  CHECK(ctx.sent.empty());
}

TEST_CASE("node: Start nominates self to the successor") {
  MockContext ctx(ActorId{10});
  NodeState state = node_intent(Member{ActorId{11}}, {ActorId{1}, Msg{Start{}}}, ctx);
  CHECK(std::get<Member>(state).next == ActorId{11});
  REQUIRE(ctx.sent.size() == 1);
  CHECK(ctx.sent[0].first == ActorId{11});
  REQUIRE(sent_nomination(ctx, 0) != nullptr);
  CHECK(sent_nomination(ctx, 0)->nominee == ActorId{10});
}

TEST_CASE("node: own nomination means victory") {
  MockContext ctx(ActorId{10});
  node_intent(Member{ActorId{11}}, {ActorId{9}, Msg{Nominate{ActorId{10}}}}, ctx);
  CHECK(ctx.sent.empty());
  REQUIRE(ctx.emitted.size() == 1);
  CHECK(ctx.emitted[0] == "ActorId 10: I win");
}

TEST_CASE("node: greater nominee is forwarded") {
  MockContext ctx(ActorId{10});
  node_intent(Member{ActorId{11}}, {ActorId{9}, Msg{Nominate{ActorId{12}}}}, ctx);
  REQUIRE(ctx.sent.size() == 1);
  CHECK(ctx.sent[0].first == ActorId{11});
  CHECK(sent_nomination(ctx, 0)->nominee == ActorId{12});
  CHECK(ctx.emitted.empty());
}

TEST_CASE("node: lesser nominee is dropped") {
  MockContext ctx(ActorId{10});
  node_intent(Member{ActorId{11}}, {ActorId{9}, Msg{Nominate{ActorId{4}}}}, ctx);
  CHECK(ctx.sent.empty());
  REQUIRE(ctx.emitted.size() == 1);
  CHECK(ctx.emitted[0] == "Ignored nomination");
}

TEST_CASE("node: out-of-protocol messages crash") {
  MockContext ctx(ActorId{10});
  CHECK_THROWS_AS(node_intent(Uninitialized{}, {ActorId{1}, Msg{Start{}}}, ctx),
                  std::logic_error);
  CHECK_THROWS_AS(node_intent(Uninitialized{}, {ActorId{1}, Msg{Nominate{ActorId{2}}}}, ctx),
                  std::logic_error);
  CHECK_THROWS_AS(node_intent(Member{ActorId{11}}, {ActorId{1}, Msg{Init{ActorId{3}}}}, ctx),
                  std::logic_error);
}

TEST_CASE("ring_election rejects rings smaller than two") {
  actors::Runtime rt;
  actors::Client coordinator = rt.make_client();
  Rng rng(1);
  CHECK_THROWS_AS(ring_election(rt, coordinator.id(), 0, basic_node_factory(), rng),
                  actors::InvalidRingSize);
  CHECK_THROWS_AS(ring_election(rt, coordinator.id(), 1, basic_node_factory(), rng),
                  actors::InvalidRingSize);
}

TEST_CASE("basic election: the greatest id wins, nomination count matches") {
  for (std::uint64_t seed : {1, 7, 23}) {
    for (std::size_t n : {2, 5, 8}) {
      auto capture = std::make_shared<actors::CaptureTraceSink>();
      actors::Runtime rt(actors::Runtime::Options{0, capture});
      actors::Client coordinator = rt.make_client();
      Rng rng(seed);
      std::vector<ActorId> order =
          ring_election(rt, coordinator.id(), n, basic_node_factory(), rng);
      REQUIRE(rt.await_quiescence(10000ms));

      const ActorId winner = *std::max_element(order.begin(), order.end());
      CHECK(capture->count_containing(winner.str() + ": I win") == 1);
      CHECK(capture->count_containing(": I win") == 1);
      CHECK(capture->count_containing("send Nominate") ==
            oracles::nominate_count(order));
      stop_ring(rt, order);
    }
  }
}

TEST_CASE("completion cell refuses a second put") {
  CompletionCell cell;
  cell.put(ActorId{3});
  CHECK_THROWS_AS(cell.put(ActorId{4}), std::logic_error);
  CHECK(cell.puts() == 2);
  CHECK(cell.await(0ms) == ActorId{3});
}

"""Impact rankings and what-if curriculum planning.

Run from the repository root:  python3 demos/03_impact_and_whatif.py
"""

from curriculum_bn import (
    TargetSpec,
    build_default_model,
    compare_plans,
    d_separated,
    evaluate_plan,
    impact_ranking,
)

net = build_default_model()

print("=== which variables move the recommendation letter? ===")
report = impact_ranking(net, TargetSpec("RecL", "approved"), {})
print(f"baseline P(RecL=approved) = {report.baseline:.4f}")
for e in report.entries:
    bar = "#" * int(round(e.magnitude * 10))
    print(f"  {e.influencer:<13} {e.level:+7.3f}  (at {e.achieving_state:<9}) {bar}")

print("\n=== and satisfaction? ===")
report = impact_ranking(net, TargetSpec("Satisfaction", "high"), {})
for e in report.entries[:4]:
    print(f"  {e.influencer:<13} {e.level:+7.3f}  (at {e.achieving_state})")

print("\n=== d-separation sanity checks ===")
print("S independent of RBG a priori?", d_separated(net.structure, "S", "RBG", set()))
print("... still, given the grade?", d_separated(net.structure, "S", "RBG", {"G"}))

print("\n=== what-if: how many courses should this student take? ===")
profile = {"AG": "B", "S": "active", "RBG": "yes"}
baseline = evaluate_plan(net, profile)
print(f"profile {profile}: success score {baseline.success_score:.4f}")
scenarios = [{"NumC": "few"}, {"NumC": "normal"}, {"NumC": "many"}]
for outcome in compare_plans(net, profile, scenarios):
    r = outcome.report
    print(f"  NumC={outcome.scenario['NumC']:<7} score {r.success_score:.4f}  "
          f"P(G=A)={r.outcomes['G']['A']:.4f}  "
          f"P(RecL=approved)={r.outcomes['RecL']['approved']:.4f}")

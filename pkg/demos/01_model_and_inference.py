"""Tour of the bundled curriculum network and the exact inference engine.

Run from the repository root:  python3 demos/01_model_and_inference.py
"""

from curriculum_bn import (
    build_default_model,
    enumerate_joint,
    evidence_likelihood,
    joint_probability,
    map_assignment,
    posterior_marginal,
    topological_order,
    validate_network,
)

net = build_default_model()

print("=== structure ===")
print("variables:", ", ".join(f"{v.name}{list(v.states)}" for v in net.variables))
print("edges:", sorted(net.structure.edges))
print("topological order:", topological_order(net.structure))
print("validation violations:", validate_network(net))

print("\n=== priors and posteriors ===")
print("P(AG) with no evidence:", posterior_marginal(net, {}, "AG").as_mapping())
print("P(RecL) with no evidence:", posterior_marginal(net, {}, "RecL").as_mapping())

strong = {"AG": "A", "RBG": "yes", "Pub": "yes", "A": "high"}
weak = {"AG": "C", "RBG": "no", "Pub": "no", "A": "low"}
for label, profile in [("strong student", strong), ("struggling student", weak)]:
    dist = posterior_marginal(net, profile, "RecL")
    print(f"P(RecL | {label}):", {s: round(p, 4) for s, p in dist.as_mapping().items()})

print("\n=== joint probabilities and the enumeration oracle ===")
assignment = {
    "AG": "A", "S": "active", "A": "high", "NumC": "normal", "RBG": "yes",
    "Pub": "yes", "G": "A", "RecL": "approved", "Satisfaction": "high",
}
p = joint_probability(net, assignment)
print(f"chain-rule probability of one bright scenario: {p:.6f}")
table = enumerate_joint(net)
print(f"full joint table: {table.cells} cells, total {table.total():.12f}")
print("oracle marginal of RecL:", {
    s: round(v, 6) for s, v in table.marginal({}, "RecL").as_mapping().items()
})

print("\n=== evidence likelihood and MAP ===")
evidence = {"G": "C", "Pub": "no"}
print(f"P(G=C, Pub=no) = {evidence_likelihood(net, evidence):.6f}")
result = map_assignment(net, evidence, {"AG", "RBG"})
print("most probable background given that outcome:", result.assignment,
      f"(posterior {result.probability:.4f})")

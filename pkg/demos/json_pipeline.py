"""The JSON document pipeline used by the CLI and the HTTP service.

TaskDocument -> MotionDocument -> factorization/mechanism document, all via
the same canonical serializer (sorted keys, shortest round-trip decimals),
which is what makes the CLI and service byte-identical.
"""

import json
import random

from motionforge.documents import (canonical_json, factorize_document,
                                   interpolate_document)

random.seed(5)
task = {
    "schema_version": "1",
    "task": {
        "kind": "points5",
        "points": [[random.uniform(-1, 1) for _ in range(3)] for _ in range(5)],
    },
}
print("TaskDocument:")
print(json.dumps(task, indent=2))

motion_doc, report = interpolate_document(task)
print("\nreport:", json.dumps(report, indent=2))
print("\nMotionDocument (canonical bytes, truncated):")
text = canonical_json(motion_doc)
print(text[:200] + " ...")

round_trip = canonical_json(json.loads(text))
print(f"\nserialization round-trips bit-identically: {round_trip == text}")

result = factorize_document(motion_doc, with_mechanisms=True)
print(f"\nfactorizations: {len(result['factorizations'])}, "
      f"mechanisms: {len(result['mechanisms'])}")
for mech in result["mechanisms"]:
    print(f"  pair {mech['pair']}: {len(mech['joints'])} joints")

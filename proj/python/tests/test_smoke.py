# Copyright 2026 The Factstream Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import factstream


def test_normalize_and_segment():
    assert factstream.normalize_text("RT @x: hi #CampFire", "twitter") == "hi camp fire"
    assert factstream.segment_hashtag("CampFire") == ["camp", "fire"]


def test_tag_entities_numbers():
    kinds = {t for _, t, _, _ in factstream.tag_entities("about 7,000 acres burned")}
    assert "NUMBER" in kinds


def test_bm25_idf():
    assert factstream.bm25_idf(10, 2) == pytest.approx(math.log(8.5 / 2.5 + 1))


def test_retrieve_ranks_matching_doc_first():
    docs = [("a", "road closed near the camp"), ("b", "weather is sunny"),
            ("c", "the camp fire spread overnight")]
    ranked = factstream.retrieve(docs, "camp fire", expand=False)
    assert ranked[0][0] == "c"
    assert "b" not in [d for d, _ in ranked]


def test_solve_exact_matches_greedy_on_easy_case():
    weights = [3.0, 1.0, 1.0]
    occurrence = [[1, 0, 0], [0, 1, 0], [0, 1, 1]]
    chosen, obj = factstream.solve(weights, occurrence, ["d1", "d2", "d3"], 2, "exact")
    assert chosen == ["d1", "d2"]
    assert obj == 5.0
    assert factstream.solve(weights, occurrence, ["d1", "d2", "d3"], 2, "greedy")[1] == 5.0


def test_mmr_past_penalty():
    cands = [("new", "road closed", 1.0)]
    base = factstream.mmr_rank(cands)[0][1]
    dup = factstream.mmr_rank(cands, past=[("old", "road closed")])[0][1]
    assert base == pytest.approx(0.8)
    assert dup == pytest.approx(0.6)


def test_metrics():
    gains = {"f1": 2.0, "f2": 1.0, "f3": 1.0}
    assert factstream.comprehensiveness(gains, {"f1": {"s1"}}) == pytest.approx(0.5)
    assert factstream.redundancy_ratio({"f1": 2.0, "f2": 1.0},
                                       {"f1": {"a", "b"}, "f2": {"c"}}) == pytest.approx(0.6)
    assert factstream.redundancy_ratio(gains, {}) is None
    assert factstream.relevance({"q1": 0.9, "q2": 0.7}) == pytest.approx(1.6)


def test_errors_raise():
    with pytest.raises(ValueError):
        factstream.relevance({})
    with pytest.raises(factstream.FactstreamError):
        factstream.mmr_rank([], lambda_=1.5)


def test_synthetic_run_and_evaluate(tmp_path):
    factstream.synthesize(3, str(tmp_path), items_per_day=60)
    rows = factstream.run_pipeline(str(tmp_path / "config.json"))
    assert rows and rows[0]["rank"] == 1
    assert factstream.run_pipeline(str(tmp_path / "config.json"), {"threads": 2}) == rows
    with open(tmp_path / "run.jsonl", "w") as f:
        import json
        for r in rows:
            f.write(json.dumps(r) + "\n")
    metrics = factstream.evaluate(tmp_path / "run.jsonl", tmp_path / "facts.json",
                                  tmp_path / "matches.json", 20)
    assert 0.0 < metrics["comprehensiveness"]["overall"] <= 1.0

from levifusion.verify import assignments, enumerate_table, run_verify


def test_assignments_counts():
    assert len(list(assignments(3, sparse=False))) == 8
    assert len(list(assignments(2, sparse=True))) == 9


def test_run_verify_a4_green():
    report = run_verify("A", 4, methods=("weight", "partition", "oracle"))
    assert report.ok
    assert report.inputs_checked == 16
    assert report.mismatches == []
    assert report.per_method["weight"]["runs"] == 16
    d = report.to_dict()
    assert d["ok"] is True and d["family"] == "A"


def test_run_verify_d4_branch_ties():
    report = run_verify("D", 4, methods=("weight", "partition"),
                        branch_ties=True)
    assert report.ok and report.inputs_checked == 16


def test_run_verify_e6_with_oracle():
    report = run_verify("E", 6)
    assert report.ok
    assert report.inputs_checked == 64
    assert report.detection_gaps == []
    assert report.ambiguous_signatures == 0


def test_run_verify_sparse():
    report = run_verify("A", 2, sparse=True)
    assert report.ok and report.inputs_checked == 9


def test_run_verify_folding_family():
    report = run_verify("B", 3)
    assert report.ok and report.inputs_checked == 8
    assert set(report.methods) == {"fold", "fold_a"}


def test_run_verify_workers_match_serial():
    serial = run_verify("A", 5)
    parallel = run_verify("A", 5, workers=2)
    assert serial.ok and parallel.ok
    assert serial.inputs_checked == parallel.inputs_checked


def test_enumerate_table_g2():
    records = list(enumerate_table("G", 2))
    assert len(records) == 9                    # 3^2 assignments
    by_labels = {(tuple(r["plus"]), tuple(r["minus"])): r for r in records}
    assert by_labels[((1, 2), ())]["j"] == [1, 2]
    assert by_labels[((1, 2), ())]["levi_type"] == "G2"
    assert by_labels[((), ())]["j"] == []


def test_enumerate_table_a2_classes():
    records = list(enumerate_table("A", 2))
    rec = next(r for r in records if r["plus"] == [1] and r["minus"] == [2])
    assert rec["canonical_j"] == [1]
    assert rec["levi_type"] == "A1"
    full = next(r for r in records if r["plus"] == [1, 2])
    assert full["j"] == [1, 2]

import pytest

import eacq


def nine():
    entry = eacq.find_code("eacq-9-1-3")
    assert entry is not None
    return entry.code


def test_catalog():
    names = [e.name for e in eacq.catalog()]
    assert names == ["eacq-9-1-3", "eacq-8-1-3-1", "ea-css-63-21-9",
                     "eacq-63-21-12"]
    entry = eacq.find_code("eacq-9-1-3")
    assert entry.bracket == "[[9,1:3,3;0]]"
    p = entry.code.params
    assert (p.n, p.q, p.c, p.e) == (9, 1, 3, 0)
    assert entry.code.d_claimed == 3
    assert eacq.find_code("no-such-code") is None


def test_generators():
    code = nine()
    assert code.stabilizer_generators == [
        "ZZIZZIZZI", "IIIIZZIZZ", "ZIZZZIIII", "YYXXYYIII", "ZIZYXYYXY"]
    assert code.classical_generators == [
        "ZZIIIIIII", "IZZIIIIII", "IIIIZZIII"]
    assert code.logical_z == ["ZIIIIZIIZ"]
    assert code.logical_x == ["XXXIIIIII"]


def test_syndromes_and_classification():
    code = nine()
    assert eacq.syndrome(code, "XIIIIIIII") == "10111"
    assert eacq.syndrome(code, "ZIIIIIIII") == "00010"
    cls = eacq.classify_pair(code, "ZIIIIIIII", "IZIIIIIII")
    assert cls == eacq.ErrorClass.DegenerateClassical
    pair = eacq.check_correctable(
        code, ["IIIIIIIII", "YIIIIIIII", "IIIXIIIII"])
    assert pair == ("YIIIIIIII", "IIIXIIIII")


def test_distance():
    r = eacq.distance_search(nine(), 3)
    assert r.exhaustive and r.distance == 2
    assert r.witness == "IIIIIYIIY"


def test_decoder_tables(tmp_path):
    code = nine()
    with pytest.raises(RuntimeError, match="not degenerate"):
        eacq.build_decoder(code, 1)
    table = eacq.build_decoder(code, 1, eacq.DecoderPolicy.BestEffort)
    assert len(table) == 19
    assert table.code_id == eacq.code_hash(code)
    assert eacq.lookup(table, "00000") == "IIIIIIIII"
    assert eacq.lookup(table, "11111") is None
    path = str(tmp_path / "nine.dtable")
    eacq.write_decode_table(path, table)
    assert len(eacq.read_decode_table(path)) == 19


def test_encode_decode_cycle():
    code = nine()
    table = eacq.build_decoder(code, 1, eacq.DecoderPolicy.BestEffort)
    st = eacq.encode(code, "101", "1")
    eacq.apply_error(st, "IIZIIIIII")
    syn = eacq.measure_syndrome(st, code)
    assert syn == eacq.syndrome(code, "IIZIIIIII") == "00010"
    eacq.apply_error(st, eacq.lookup(table, syn))
    assert eacq.readout(st, code) == ("101", "1")


def test_transforms():
    code = nine()
    plain = eacq.strip(code)
    assert (plain.params.c, plain.params.q) == (0, 1)
    again = eacq.enhance(plain, 3, 0)
    assert (again.params.c1, again.params.c2) == (3, 0)
    with pytest.raises(RuntimeError):
        eacq.enhance(code, 1, 0)  # classical side already occupied


def test_build_and_files(tmp_path):
    code = eacq.build(["10|00", "01|00"], ["10", "01"])
    p = code.params
    assert (p.n, p.q, p.c, p.e) == (2, 0, 0, 0)
    text = eacq.code_to_string(code)
    assert text.startswith("eacq v1\n")
    path = str(tmp_path / "tiny.eacq")
    eacq.write_code(code, path)
    assert eacq.code_hash(eacq.read_code(path)) == eacq.code_hash(code)


def test_trials_deterministic():
    assert eacq.RNG_ID == "splitmix64-v1"
    plain = eacq.strip(nine())
    table = eacq.build_decoder(plain, 1)
    stats = eacq.run_trials(plain, table, p=0.1, trials=200, seed=42)
    assert (stats.classical_failures, stats.quantum_failures) == (29, 34)
    again = eacq.run_trials(plain, table, p=0.1, trials=200, seed=42,
                            threads=3)
    assert (again.classical_failures, again.quantum_failures) == (29, 34)

GOLDEN_FROM_TWO = (
    "Position: 2\n"
    "Legal subtrahends: 1\n"
    "Your move: You take 1 from 2, leaving 1\n"
    "Engine takes 1 from 1, leaving 0\n"
    "Position: 0\n"
    "No legal move: you lose.\n"
)


def test_golden_transcript_from_two(run_tool):
    assert run_tool("play", "2", stdin="1\n") == (0, GOLDEN_FROM_TWO)


def test_transcript_is_deterministic(run_tool):
    assert run_tool("play", "2", stdin="1\n") == run_tool("play", "2", stdin="1\n")


def test_start_at_zero_loses_immediately(run_tool):
    assert run_tool("play", "0") == (0, "Position: 0\nNo legal move: you lose.\n")


def test_engine_first_takes_everything(run_tool):
    code, out = run_tool("play", "--engine-first", "4")
    assert code == 0
    assert out == "Engine takes 4 from 4, leaving 0\nPosition: 0\nNo legal move: you lose.\n"


def test_illegal_move_reprompts(run_tool):
    _, out = run_tool("play", "2", stdin="4\nzwei\n1\n")
    assert out.startswith(
        "Position: 2\n"
        "Legal subtrahends: 1\n"
        "Your move: Illegal move: 4 is not a legal subtrahend from 2\n"
        "Position: 2\n"
        "Legal subtrahends: 1\n"
        "Your move: Illegal move: cannot read 'zwei' as a move\n"
    )
    assert out.endswith("No legal move: you lose.\n")


def test_end_of_input_resigns(run_tool):
    code, out = run_tool("play", "5", stdin="")
    assert code == 0
    assert out == "Position: 5\nLegal subtrahends: 1, 4\nYour move: You resign. The engine wins.\n"


def test_human_can_win_from_n_position(run_tool):
    # 4 is an N-position: taking 4 leaves the engine at 0
    code, out = run_tool("play", "4", stdin="4\n")
    assert code == 0
    assert out.endswith("You take 4 from 4, leaving 0\nThe engine has no legal move: you win.\n")


def test_sum_of_games(run_tool):
    code, out = run_tool("play", "--engine-first", "4", "1", stdin="1 1\n0 1\n")
    assert code == 0
    assert out.splitlines() == [
        "Engine takes 1 from #0 (4), leaving 3",
        "Positions: #0=3, #1=1",
        "Legal subtrahends: #0: 1; #1: 1",
        "Your move: You take 1 from #1 (1), leaving 0",
        "Engine takes 1 from #0 (3), leaving 2",
        "Positions: #0=2, #1=0",
        "Legal subtrahends: #0: 1; #1: none",
        "Your move: You take 1 from #0 (2), leaving 1",
        "Engine takes 1 from #0 (1), leaving 0",
        "Positions: #0=0, #1=0",
        "No legal move: you lose.",
    ]

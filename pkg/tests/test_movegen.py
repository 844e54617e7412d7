import random

from reference_engine import ref_legal_moves, ref_move_uci, ref_parse_fen, ref_perft

from chesslut.bitboard import popcount, square_index
from chesslut.movegen import (
    CASTLE,
    EP_CAPTURE,
    KING_ATTACKS,
    KNIGHT_ATTACKS,
    PROMOTION,
    build_leaper_tables,
    generate_legal,
    generate_pseudo_legal,
    in_check,
    make_move,
    perft,
)
from chesslut.position import (
    BLACK,
    KNIGHT,
    PAWN,
    QUEEN,
    ROOK,
    WHITE,
    parse_fen,
    serialize_fen,
    startpos,
)

KIWIPETE = "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1"
POS3 = "8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1"
POS4 = "r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1"


def uci_set(moves):
    return {move.uci() for move in moves}


def ref_uci_set(fen):
    return {ref_move_uci(move) for move in ref_legal_moves(ref_parse_fen(fen))}


# -- leaper tables ------------------------------------------------------------


def test_knight_corner_geometry():
    expected = (1 << square_index("b3")) | (1 << square_index("c2"))
    assert KNIGHT_ATTACKS[square_index("a1")] == expected


def test_king_e4_has_eight_neighbors():
    assert popcount(KING_ATTACKS[square_index("e4")]) == 8


def test_knight_d4_has_eight_targets():
    assert popcount(KNIGHT_ATTACKS[square_index("d4")]) == 8


def test_build_leaper_tables_matches_module_constants():
    knight, king = build_leaper_tables()
    assert knight == KNIGHT_ATTACKS
    assert king == KING_ATTACKS


# -- generation basics --------------------------------------------------------


def test_startpos_has_twenty_moves(direct_backend):
    assert len(generate_pseudo_legal(startpos(), direct_backend)) == 20
    assert len(generate_legal(startpos(), direct_backend)) == 20


def test_lone_bishop_c4_has_eleven_moves(direct_backend):
    pos = parse_fen("8/8/8/8/2B5/8/8/8 w - -")
    assert len(generate_pseudo_legal(pos, direct_backend)) == 11
    assert len(generate_legal(pos, direct_backend)) == 11


def test_geometrically_frozen_side_has_no_moves(direct_backend):
    # A single pawn whose push square is occupied and with nothing to capture.
    pos = parse_fen("8/8/8/8/8/b7/P7/8 w - -")
    assert generate_pseudo_legal(pos, direct_backend) == []


def test_generation_is_deterministic(direct_backend):
    pos = parse_fen(KIWIPETE)
    first = generate_pseudo_legal(pos, direct_backend)
    second = generate_pseudo_legal(pos, direct_backend)
    assert first == second


def test_backends_generate_identical_move_lists(direct_backend, rotated_backend, playout_positions):
    for position, _ in playout_positions[:200]:
        direct_moves = generate_pseudo_legal(position, direct_backend)
        rotated_moves = generate_pseudo_legal(position, rotated_backend)
        assert direct_moves == rotated_moves


# -- agreement with the independent coordinate generator ----------------------


def test_legal_moves_match_reference_on_known_positions(direct_backend):
    for fen in (serialize_fen(startpos()), KIWIPETE, POS3, POS4):
        assert uci_set(generate_legal(parse_fen(fen), direct_backend)) == ref_uci_set(fen)


def test_legal_moves_match_reference_on_playouts(direct_backend, playout_positions):
    for position, _ in playout_positions[:60]:
        fen = serialize_fen(position)
        assert uci_set(generate_legal(position, direct_backend)) == ref_uci_set(fen)


# -- make_move ----------------------------------------------------------------


def test_make_move_leaves_original_untouched(direct_backend):
    pos = startpos()
    snapshot = parse_fen(serialize_fen(pos))
    move = generate_legal(pos, direct_backend)[0]
    child = make_move(pos, move)
    assert pos == snapshot
    assert child != pos
    assert child.side_to_move == BLACK


def test_double_push_sets_ep_square(direct_backend):
    pos = startpos()
    move = next(m for m in generate_legal(pos, direct_backend) if m.uci() == "e2e4")
    child = make_move(pos, move)
    assert child.ep_square == square_index("e3")


def test_ep_capture_removes_captured_pawn(direct_backend):
    pos = parse_fen("4k3/8/8/8/4pP2/8/8/4K3 b - f3")
    move = next(m for m in generate_legal(pos, direct_backend) if m.kind == EP_CAPTURE)
    assert move.uci() == "e4f3"
    child = make_move(pos, move)
    assert child.piece_bb(WHITE, PAWN) == 0
    assert child.piece_bb(BLACK, PAWN) == 1 << square_index("f3")


def test_castling_moves_king_and_rook(direct_backend):
    pos = parse_fen("4k3/8/8/8/8/8/8/4K2R w K -")
    move = next(m for m in generate_legal(pos, direct_backend) if m.kind == CASTLE)
    assert move.uci() == "e1g1"
    child = make_move(pos, move)
    assert child.king_square(WHITE) == square_index("g1")
    assert child.piece_bb(WHITE, ROOK) == 1 << square_index("f1")
    assert child.castling == 0


def test_castling_blocked_through_attacked_square(direct_backend):
    # Black rook covers f1, so kingside castling must not be generated.
    pos = parse_fen("4kr2/8/8/8/8/8/8/4K2R w K -")
    assert not any(m.kind == CASTLE for m in generate_pseudo_legal(pos, direct_backend))


def test_promotion_generates_four_pieces(direct_backend):
    pos = parse_fen("8/P7/8/8/8/8/8/K6k w - -")
    promos = [m for m in generate_legal(pos, direct_backend) if m.kind == PROMOTION]
    assert sorted(m.uci() for m in promos) == ["a7a8b", "a7a8n", "a7a8q", "a7a8r"]
    queen = next(m for m in promos if m.promotion == QUEEN)
    child = make_move(pos, queen)
    assert child.piece_bb(WHITE, PAWN) == 0
    assert child.piece_bb(WHITE, QUEEN) == 1 << square_index("a8")


def test_capture_promotion(direct_backend):
    pos = parse_fen("1n2k3/P7/8/8/8/8/8/4K3 w - -")
    move = next(
        m for m in generate_legal(pos, direct_backend) if m.kind == PROMOTION and m.promotion == KNIGHT and m.to_square == square_index("b8")
    )
    child = make_move(pos, move)
    assert child.piece_bb(BLACK, KNIGHT) == 0
    assert child.piece_bb(WHITE, KNIGHT) == 1 << square_index("b8")


def test_rook_capture_revokes_castling_rights(direct_backend):
    pos = parse_fen("r3k2r/8/8/8/8/8/8/R3K2R w KQkq -")
    move = next(m for m in generate_legal(pos, direct_backend) if m.uci() == "a1a8")
    child = make_move(pos, move)
    # White queenside and black queenside rights both die with the rooks.
    assert child.castling == 0b0101


def test_random_playout_round_trips_through_fen(direct_backend):
    rng = random.Random(53)
    pos = startpos()
    for _ in range(60):
        moves = generate_legal(pos, direct_backend)
        if not moves:
            break
        pos = make_move(pos, rng.choice(moves))
        assert parse_fen(serialize_fen(pos)) == pos
        union = 0
        for board in pos.pieces:
            assert union & board == 0
            union |= board


def test_in_check_detection(direct_backend):
    pos = parse_fen("4k3/8/8/8/8/8/4R3/4K3 b - -")
    assert in_check(pos, BLACK, direct_backend)
    assert not in_check(pos, WHITE, direct_backend)


# -- perft --------------------------------------------------------------------


def test_perft_depth_zero_is_one(direct_backend):
    assert perft(startpos(), 0, direct_backend) == 1


def test_perft_startpos_matches_reference_live(direct_backend):
    ref_start = ref_parse_fen(serialize_fen(startpos()))
    for depth in (1, 2, 3):
        assert perft(startpos(), depth, direct_backend) == ref_perft(ref_start, depth)


def test_perft_startpos_frozen_values(direct_backend):
    assert perft(startpos(), 1, direct_backend) == 20
    assert perft(startpos(), 2, direct_backend) == 400
    assert perft(startpos(), 3, direct_backend) == 8902


def test_perft_tactical_positions_match_reference(direct_backend):
    for fen, depth in ((KIWIPETE, 2), (POS3, 3), (POS4, 2)):
        expected = ref_perft(ref_parse_fen(fen), depth)
        assert perft(parse_fen(fen), depth, direct_backend) == expected


def test_perft_backends_agree(direct_backend, rotated_backend):
    for fen, depth in ((KIWIPETE, 2), (POS3, 3)):
        pos = parse_fen(fen)
        assert perft(pos, depth, direct_backend) == perft(pos, depth, rotated_backend)

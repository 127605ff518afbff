#!/usr/bin/env python3
"""Generates data/sample_catalog.txt, the small catalog shipped with the editor.

Drawings are simple stroked outlines in the 100x100 art box. Hand shapes are
authored once (right hand, upright) and the handedness/rotation variants are
produced by mirroring and rotating the points about the box center.
"""

import math
import sys

ROT_STEPS = 8


def fmt(v):
    v = round(v, 1)
    if v == int(v):
        return str(int(v))
    return f"{v:.1f}"


def transform(pt, mirrored, rot):
    x, y = pt[0] - 50, pt[1] - 50
    if mirrored:
        x = -x
    th = math.radians(45 * rot)
    # counter-clockwise on screen (+y down)
    rx = x * math.cos(th) + y * math.sin(th)
    ry = -x * math.sin(th) + y * math.cos(th)
    return (rx + 50, ry + 50)


def polyline(points, closed):
    out = "M" + " L".join(f"{fmt(x)} {fmt(y)}" for x, y in points)
    return out + (" Z" if closed else "")


def hand_shape(palm, fingers):
    if palm == "front":
        outline = [(35, 50), (65, 50), (65, 80), (35, 80)]
    elif palm == "back":
        outline = [(35, 50), (65, 50), (65, 80), (35, 80)]
    else:
        outline = [(45, 50), (55, 50), (55, 80), (45, 80)]
    strokes = [(outline, True)]
    if palm == "back":
        strokes.append(([(35, 50), (65, 80)], False))
    # thumb counts as the fifth finger
    xs = [38, 46, 54, 62][: min(fingers, 4)]
    for x in xs:
        strokes.append(([(x, 50), (x, 22)], False))
    if fingers == 5:
        strokes.append(([(65, 62), (82, 48)], False))
    return strokes


def render(strokes, mirrored=False, rot=0):
    parts = []
    for pts, closed in strokes:
        parts.append(polyline([transform(p, mirrored, rot) for p in pts], closed))
    return " ".join(parts)


def main(out_path):
    lines = [
        "# Sample catalog shipped with the editor. Generated by tools/gen_sample_catalog.py.",
        "CATALOG sample 1.0",
        'CATEGORY head LABEL "Head" KIND anatomical',
        'CATEGORY shoulders LABEL "Shoulders" KIND anatomical',
        'CATEGORY hands LABEL "Hands" KIND anatomical',
        'CATEGORY arms LABEL "Arms" KIND anatomical',
        'CATEGORY punctuation LABEL "Punctuation" KIND symbolic',
        'CATEGORY contact LABEL "Contact" KIND symbolic',
        'FACET head region LABEL "Region" VALUES brow,eyes,nose,mouth,cheek',
        'FACET head side LABEL "Side" VALUES left,right,both',
        'FACET shoulders movement LABEL "Movement" VALUES up,down,forward,back',
        'FACET shoulders side LABEL "Side" VALUES left,right,both',
        'FACET hands handedness LABEL "Handedness" VALUES L,R',
        'FACET hands fingers LABEL "Fingers" VALUES 0,1,2,3,4,5',
        'FACET hands palm LABEL "Palm" VALUES front,back,side',
        'FACET hands rotation LABEL "Rotation" VALUES 0,1,2,3,4,5,6,7',
        'FACET arms movement LABEL "Movement" VALUES straight,curved,circle,zigzag',
        'FACET arms direction LABEL "Direction" VALUES up,down,left,right',
        'FACET arms hand LABEL "Hand" VALUES L,R',
        'FACET punctuation mark LABEL "Mark" VALUES period,comma,colon,question,exclamation',
        'FACET contact type LABEL "Type" VALUES touch,grasp,strike,brush,rub,between',
        'FACET contact count LABEL "Count" VALUES 1,2',
        "",
    ]

    head_art = {
        "brow": [([(20, 45), (50, 30), (80, 45)], False)],
        "eyes": [([(25, 50), (40, 45), (55, 50)], False)],
        "nose": [([(50, 30), (45, 60), (55, 60)], False)],
        "mouth": [([(30, 60), (50, 70), (70, 60), (30, 60)], True)],
        "cheek": [([(30, 40), (40, 60), (30, 80)], False)],
    }
    for region, strokes in head_art.items():
        for side in ["left", "right", "both"]:
            art = strokes
            if side == "left":
                art = [([(x * 0.6 + 10, y) for x, y in pts], c) for pts, c in strokes]
            elif side == "right":
                art = [([(x * 0.6 + 30, y) for x, y in pts], c) for pts, c in strokes]
            base = f"head:{region}-both"
            lines.append(
                f"GLYPH head:{region}-{side} BASE {base} FACETS region={region},side={side} "
                f'PATH "{render(art)}"'
            )
    lines.append("")

    for movement, dy in [("up", -25), ("down", 25), ("forward", 0), ("back", 0)]:
        for side in ["left", "right", "both"]:
            y = 60
            seg = [(10, y), (45, y)] if side != "right" else [(55, y), (90, y)]
            strokes = [(seg, False)]
            if side == "both":
                strokes.append(([(55, y), (90, y)], False))
            if movement in ("up", "down"):
                strokes.append(([(50, y), (50, y + dy)], False))
            elif movement == "forward":
                strokes.append(([(45, 40), (50, 30), (55, 40)], False))
            else:
                strokes.append(([(45, 80), (50, 90), (55, 80)], False))
            lines.append(
                f"GLYPH shoulders:{movement}-{side} BASE shoulders:{movement}-both "
                f'FACETS movement={movement},side={side} PATH "{render(strokes)}"'
            )
    lines.append("")

    for palm in ["front", "back", "side"]:
        for fingers in range(6):
            shape = hand_shape(palm, fingers)
            base = f"hands:{palm}-{fingers}-R-0"
            for hand in ["L", "R"]:
                for rot in range(ROT_STEPS):
                    gid = f"hands:{palm}-{fingers}-{hand}-{rot}"
                    lines.append(
                        f"GLYPH {gid} BASE {base} FACETS handedness={hand},fingers={fingers},"
                        f'palm={palm},rotation={rot} PATH "{render(shape, hand == "L", rot)}"'
                    )
    lines.append("")

    arrows = {"up": 0, "left": 2, "down": 4, "right": 6}
    moves = {
        "straight": [([(50, 85), (50, 15)], False), ([(40, 25), (50, 15), (60, 25)], False)],
        "curved": [([(50, 85), (65, 60), (65, 40), (50, 15)], False),
                   ([(40, 25), (50, 15), (60, 25)], False)],
        "circle": [([(50, 20), (71, 29), (80, 50), (71, 71), (50, 80), (29, 71), (20, 50), (29, 29)], True),
                   ([(42, 12), (50, 20), (42, 28)], False)],
        "zigzag": [([(50, 85), (40, 70), (60, 55), (40, 40), (50, 15)], False),
                   ([(40, 25), (50, 15), (60, 25)], False)],
    }
    for movement, strokes in moves.items():
        for direction, rot in arrows.items():
            for hand in ["L", "R"]:
                lines.append(
                    f"GLYPH arms:{movement}-{direction}-{hand} BASE arms:{movement}-up-R "
                    f"FACETS movement={movement},direction={direction},hand={hand} "
                    f'PATH "{render(strokes, hand == "L", rot)}"'
                )
    lines.append("")

    marks = {
        "period": [([(45, 45), (55, 45), (55, 55), (45, 55)], True)],
        "comma": [([(50, 40), (50, 60), (42, 70)], False)],
        "colon": [([(45, 25), (55, 25), (55, 35), (45, 35)], True),
                  ([(45, 65), (55, 65), (55, 75), (45, 75)], True)],
        "question": [([(35, 30), (50, 18), (65, 30), (50, 50), (50, 65)], False),
                     ([(48, 78), (52, 78), (52, 82), (48, 82)], True)],
        "exclamation": [([(50, 15), (50, 65)], False),
                        ([(48, 78), (52, 78), (52, 82), (48, 82)], True)],
    }
    for mark, strokes in marks.items():
        lines.append(f'GLYPH punctuation:{mark} FACETS mark={mark} PATH "{render(strokes)}"')
    lines.append("")

    contacts = {
        "touch": [([(42, 42), (58, 58)], False), ([(58, 42), (42, 58)], False)],
        "grasp": [([(40, 40), (60, 40), (60, 60), (40, 60)], True),
                  ([(44, 44), (56, 56)], False)],
        "strike": [([(35, 50), (65, 50)], False), ([(50, 35), (50, 65)], False)],
        "brush": [([(30, 60), (50, 40), (70, 60)], False)],
        "rub": [([(30, 50), (40, 40), (50, 50), (60, 40), (70, 50)], False)],
        "between": [([(40, 30), (40, 70)], False), ([(60, 30), (60, 70)], False)],
    }
    for kind, strokes in contacts.items():
        for count in [1, 2]:
            art = strokes if count == 1 else [
                ([(x - 12, y) for x, y in pts], c) for pts, c in strokes
            ] + [([(x + 12, y) for x, y in pts], c) for pts, c in strokes]
            lines.append(
                f"GLYPH contact:{kind}-{count} BASE contact:{kind}-1 FACETS type={kind},count={count} "
                f'PATH "{render(art)}"'
            )

    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sample_catalog.txt")

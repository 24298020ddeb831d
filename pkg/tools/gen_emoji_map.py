#!/usr/bin/env python3
"""Regenerate the bundled emoji shortcode table.

Shortcodes follow the CLDR "short name" convention (lowercase, spaces as
underscores, hyphens kept). Base names come from the system Unicode
character database; the OVERRIDES table patches the entries whose CLDR
short names differ from the formal character names (hearts, hand signs,
most of the emoticons block, and so on). For every single-codepoint entry
an FE0F (emoji presentation selector) variant is emitted as well, so both
"❤" and "❤️" resolve to red_heart.

Usage: PYTHONPATH=src python3 tools/gen_emoji_map.py
"""

from __future__ import annotations

import sys
import unicodedata
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from infodemic.emoji_map import EMOJI_BLOCKS  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "infodemic" / "data" / "emoji_map.tsv"

# CLDR short names that differ from the Unicode character names.
OVERRIDES: dict[int, str] = {
    0x00AE: "registered",
    0x2122: "trade_mark",
    0x2139: "information",
    0x231A: "watch",
    0x231B: "hourglass_done",
    0x23F3: "hourglass_not_done",
    0x25B6: "play_button",
    0x25C0: "reverse_button",
    0x261D: "index_pointing_up",
    0x263A: "smiling_face",
    0x2615: "hot_beverage",
    0x26A0: "warning",
    0x26A1: "high_voltage",
    0x26BD: "soccer_ball",
    0x26C4: "snowman_without_snow",
    0x26D4: "no_entry",
    0x26F7: "skier",
    0x26FD: "fuel_pump",
    0x2705: "check_mark_button",
    0x2708: "airplane",
    0x270A: "raised_fist",
    0x270B: "raised_hand",
    0x270F: "pencil",
    0x2714: "check_mark",
    0x2716: "multiply",
    0x271D: "latin_cross",
    0x2728: "sparkles",
    0x2733: "eight_spoked_asterisk",
    0x2744: "snowflake",
    0x274C: "cross_mark",
    0x274E: "cross_mark_button",
    0x2753: "question_mark",
    0x2754: "white_question_mark",
    0x2755: "white_exclamation_mark",
    0x2757: "exclamation_mark",
    0x2763: "heart_exclamation",
    0x2764: "red_heart",
    0x27A1: "right_arrow",
    0x2B05: "left_arrow",
    0x2B06: "up_arrow",
    0x2B07: "down_arrow",
    0x2B1B: "black_large_square",
    0x2B1C: "white_large_square",
    0x2B50: "star",
    0x2B55: "hollow_red_circle",
    0x1F004: "mahjong_red_dragon",
    0x1F0CF: "joker",
    0x1F30D: "globe_showing_europe-africa",
    0x1F30E: "globe_showing_americas",
    0x1F30F: "globe_showing_asia-australia",
    0x1F31F: "glowing_star",
    0x1F379: "tropical_drink",
    0x1F44A: "oncoming_fist",
    0x1F44B: "waving_hand",
    0x1F44C: "ok_hand",
    0x1F44D: "thumbs_up",
    0x1F44E: "thumbs_down",
    0x1F44F: "clapping_hands",
    0x1F446: "backhand_index_pointing_up",
    0x1F447: "backhand_index_pointing_down",
    0x1F448: "backhand_index_pointing_left",
    0x1F449: "backhand_index_pointing_right",
    0x1F450: "open_hands",
    0x1F463: "footprints",
    0x1F47F: "angry_face_with_horns",
    0x1F4A9: "pile_of_poo",
    0x1F4AA: "flexed_biceps",
    0x1F4AF: "hundred_points",
    0x1F4C8: "chart_increasing",
    0x1F4C9: "chart_decreasing",
    0x1F4CA: "bar_chart",
    0x1F4E2: "loudspeaker",
    0x1F4E3: "megaphone",
    0x1F4F1: "mobile_phone",
    0x1F3FB: "light_skin_tone",
    0x1F3FC: "medium-light_skin_tone",
    0x1F3FD: "medium_skin_tone",
    0x1F3FE: "medium-dark_skin_tone",
    0x1F3FF: "dark_skin_tone",
    0x1F601: "beaming_face_with_smiling_eyes",
    0x1F603: "grinning_face_with_big_eyes",
    0x1F604: "grinning_face_with_smiling_eyes",
    0x1F605: "grinning_face_with_sweat",
    0x1F606: "grinning_squinting_face",
    0x1F60B: "face_savoring_food",
    0x1F60D: "smiling_face_with_heart-eyes",
    0x1F613: "downcast_face_with_sweat",
    0x1F618: "face_blowing_a_kiss",
    0x1F61B: "face_with_tongue",
    0x1F61C: "winking_face_with_tongue",
    0x1F61D: "squinting_face_with_tongue",
    0x1F624: "face_with_steam_from_nose",
    0x1F625: "sad_but_relieved_face",
    0x1F630: "anxious_face_with_sweat",
    0x1F638: "grinning_cat_with_smiling_eyes",
    0x1F639: "cat_with_tears_of_joy",
    0x1F63A: "grinning_cat",
    0x1F63B: "smiling_cat_with_heart-eyes",
    0x1F63C: "cat_with_wry_smile",
    0x1F63D: "kissing_cat",
    0x1F63E: "pouting_cat",
    0x1F63F: "crying_cat",
    0x1F640: "weary_cat",
    0x1F645: "person_gesturing_no",
    0x1F646: "person_gesturing_ok",
    0x1F647: "person_bowing",
    0x1F64B: "person_raising_hand",
    0x1F64C: "raising_hands",
    0x1F64E: "person_pouting",
    0x1F64F: "folded_hands",
    0x1F680: "rocket",
    0x1F691: "ambulance",
    0x1F6A8: "police_car_light",
    0x1F6AB: "prohibited",
    0x1F6D1: "stop_sign",
    0x1F926: "person_facepalming",
    0x1F937: "person_shrugging",
    0x1F92E: "face_vomiting",
    0x1F92F: "exploding_head",
    0x1F97A: "pleading_face",
    0x1F479: "ogre",
    0x1F47A: "goblin",
}


def shortcode_for(cp: int) -> str | None:
    if cp in OVERRIDES:
        return OVERRIDES[cp]
    # Regional indicators get compact names.
    if 0x1F1E6 <= cp <= 0x1F1FF:
        return "regional_indicator_" + chr(ord("a") + cp - 0x1F1E6)
    try:
        name = unicodedata.name(chr(cp))
    except ValueError:
        return None
    return name.lower().replace(" ", "_").replace(",", "")


def main() -> None:
    rows: list[tuple[str, str]] = []
    for lo, hi in EMOJI_BLOCKS:
        for cp in range(lo, hi + 1):
            code = shortcode_for(cp)
            if code is None:
                continue
            rows.append((f"{cp:04X}", code))
            rows.append((f"{cp:04X} FE0F", code))
    rows.sort()
    lines = ["# emoji shortcode table v1 (UCD %s)" % unicodedata.unidata_version]
    lines += [f"{codes}\t{code}" for codes, code in rows]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()

#include "codemix/text_prep.hpp"
namespace codemix {
namespace {
struct EmojiEntry { const char* utf8; const char* name; };
constexpr EmojiEntry kBuiltinEmoji[] = {
    {"\xe2\x9a\xa0", "warning_sign"},  // U+26A0
    {"\xe2\x9a\xbd", "soccer_ball"},  // U+26BD
    {"\xe2\x9c\x85", "white_heavy_check_mark"},  // U+2705
    {"\xe2\x9c\x8a", "raised_fist"},  // U+270A
    {"\xe2\x9c\x8b", "raised_hand"},  // U+270B
    {"\xe2\x9c\x8c", "victory_hand"},  // U+270C
    {"\xe2\x9c\xa8", "sparkles"},  // U+2728
    {"\xe2\x9d\x8c", "cross_mark"},  // U+274C
    {"\xe2\x9d\x93", "black_question_mark_ornament"},  // U+2753
    {"\xe2\x9d\x97", "heavy_exclamation_mark_symbol"},  // U+2757
    {"\xe2\x9d\xa3", "heavy_heart_exclamation_mark_ornament"},  // U+2763
    {"\xe2\x9d\xa4", "red_heart"},  // U+2764
    {"\xe2\xad\x90", "white_medium_star"},  // U+2B50
    {"\xf0\x9f\x8c\x9f", "glowing_star"},  // U+1F31F
    {"\xf0\x9f\x8c\xb3", "deciduous_tree"},  // U+1F333
    {"\xf0\x9f\x8c\xb9", "rose"},  // U+1F339
    {"\xf0\x9f\x8c\xba", "hibiscus"},  // U+1F33A
    {"\xf0\x9f\x8c\xbb", "sunflower"},  // U+1F33B
    {"\xf0\x9f\x8d\x80", "four_leaf_clover"},  // U+1F340
    {"\xf0\x9f\x8e\x86", "fireworks"},  // U+1F386
    {"\xf0\x9f\x8e\x87", "firework_sparkler"},  // U+1F387
    {"\xf0\x9f\x8e\x89", "party_popper"},  // U+1F389
    {"\xf0\x9f\x8e\x8a", "confetti_ball"},  // U+1F38A
    {"\xf0\x9f\x8e\xa4", "microphone"},  // U+1F3A4
    {"\xf0\x9f\x8e\xac", "clapper_board"},  // U+1F3AC
    {"\xf0\x9f\x8e\xb5", "musical_note"},  // U+1F3B5
    {"\xf0\x9f\x8e\xb6", "multiple_musical_notes"},  // U+1F3B6
    {"\xf0\x9f\x8f\x86", "trophy"},  // U+1F3C6
    {"\xf0\x9f\x8f\x8f", "cricket_bat_and_ball"},  // U+1F3CF
    {"\xf0\x9f\x91\x80", "eyes"},  // U+1F440
    {"\xf0\x9f\x91\x81", "eye"},  // U+1F441
    {"\xf0\x9f\x91\x86", "white_up_pointing_backhand_index"},  // U+1F446
    {"\xf0\x9f\x91\x87", "white_down_pointing_backhand_index"},  // U+1F447
    {"\xf0\x9f\x91\x88", "white_left_pointing_backhand_index"},  // U+1F448
    {"\xf0\x9f\x91\x89", "white_right_pointing_backhand_index"},  // U+1F449
    {"\xf0\x9f\x91\x8a", "fisted_hand_sign"},  // U+1F44A
    {"\xf0\x9f\x91\x8b", "waving_hand_sign"},  // U+1F44B
    {"\xf0\x9f\x91\x8c", "ok_hand_sign"},  // U+1F44C
    {"\xf0\x9f\x91\x8d", "thumbs_up_sign"},  // U+1F44D
    {"\xf0\x9f\x91\x8e", "thumbs_down_sign"},  // U+1F44E
    {"\xf0\x9f\x91\x8f", "clapping_hands_sign"},  // U+1F44F
    {"\xf0\x9f\x91\xbb", "ghost"},  // U+1F47B
    {"\xf0\x9f\x92\x80", "skull"},  // U+1F480
    {"\xf0\x9f\x92\x93", "beating_heart"},  // U+1F493
    {"\xf0\x9f\x92\x94", "broken_heart"},  // U+1F494
    {"\xf0\x9f\x92\x95", "two_hearts"},  // U+1F495
    {"\xf0\x9f\x92\x96", "sparkling_heart"},  // U+1F496
    {"\xf0\x9f\x92\x97", "growing_heart"},  // U+1F497
    {"\xf0\x9f\x92\x98", "heart_with_arrow"},  // U+1F498
    {"\xf0\x9f\x92\x99", "blue_heart"},  // U+1F499
    {"\xf0\x9f\x92\x9a", "green_heart"},  // U+1F49A
    {"\xf0\x9f\x92\x9b", "yellow_heart"},  // U+1F49B
    {"\xf0\x9f\x92\x9c", "purple_heart"},  // U+1F49C
    {"\xf0\x9f\x92\x9d", "heart_with_ribbon"},  // U+1F49D
    {"\xf0\x9f\x92\x9e", "revolving_hearts"},  // U+1F49E
    {"\xf0\x9f\x92\x9f", "heart_decoration"},  // U+1F49F
    {"\xf0\x9f\x92\xa2", "anger_symbol"},  // U+1F4A2
    {"\xf0\x9f\x92\xa4", "sleeping_symbol"},  // U+1F4A4
    {"\xf0\x9f\x92\xa5", "collision_symbol"},  // U+1F4A5
    {"\xf0\x9f\x92\xa6", "splashing_sweat_symbol"},  // U+1F4A6
    {"\xf0\x9f\x92\xa8", "dash_symbol"},  // U+1F4A8
    {"\xf0\x9f\x92\xaa", "flexed_biceps"},  // U+1F4AA
    {"\xf0\x9f\x92\xab", "dizzy_symbol"},  // U+1F4AB
    {"\xf0\x9f\x92\xaf", "hundred_points_symbol"},  // U+1F4AF
    {"\xf0\x9f\x94\xa5", "fire"},  // U+1F525
    {"\xf0\x9f\x96\xa4", "black_heart"},  // U+1F5A4
    {"\xf0\x9f\x98\x80", "grinning_face"},  // U+1F600
    {"\xf0\x9f\x98\x81", "grinning_smiling_eyes"},  // U+1F601
    {"\xf0\x9f\x98\x82", "face_with_tears_of_joy"},  // U+1F602
    {"\xf0\x9f\x98\x83", "smiling_open_mouth"},  // U+1F603
    {"\xf0\x9f\x98\x84", "smiling_open_mouth_and_smiling_eyes"},  // U+1F604
    {"\xf0\x9f\x98\x85", "smiling_open_mouth_and_cold_sweat"},  // U+1F605
    {"\xf0\x9f\x98\x86", "smiling_open_mouth_and_tightly_closed_eyes"},  // U+1F606
    {"\xf0\x9f\x98\x87", "smiling_halo"},  // U+1F607
    {"\xf0\x9f\x98\x88", "smiling_horns"},  // U+1F608
    {"\xf0\x9f\x98\x89", "winking_face"},  // U+1F609
    {"\xf0\x9f\x98\x8a", "smiling_smiling_eyes"},  // U+1F60A
    {"\xf0\x9f\x98\x8b", "face_savouring_delicious_food"},  // U+1F60B
    {"\xf0\x9f\x98\x8c", "relieved_face"},  // U+1F60C
    {"\xf0\x9f\x98\x8d", "smiling_heart_shaped_eyes"},  // U+1F60D
    {"\xf0\x9f\x98\x8e", "smiling_sunglasses"},  // U+1F60E
    {"\xf0\x9f\x98\x8f", "smirking_face"},  // U+1F60F
    {"\xf0\x9f\x98\x90", "neutral_face"},  // U+1F610
    {"\xf0\x9f\x98\x91", "expressionless_face"},  // U+1F611
    {"\xf0\x9f\x98\x92", "unamused_face"},  // U+1F612
    {"\xf0\x9f\x98\x93", "cold_sweat"},  // U+1F613
    {"\xf0\x9f\x98\x94", "pensive_face"},  // U+1F614
    {"\xf0\x9f\x98\x95", "confused_face"},  // U+1F615
    {"\xf0\x9f\x98\x96", "confounded_face"},  // U+1F616
    {"\xf0\x9f\x98\x97", "kissing_face"},  // U+1F617
    {"\xf0\x9f\x98\x98", "face_throwing_a_kiss"},  // U+1F618
    {"\xf0\x9f\x98\x99", "kissing_smiling_eyes"},  // U+1F619
    {"\xf0\x9f\x98\x9a", "kissing_closed_eyes"},  // U+1F61A
    {"\xf0\x9f\x98\x9b", "stuck_out_tongue"},  // U+1F61B
    {"\xf0\x9f\x98\x9c", "stuck_out_tongue_and_winking_eye"},  // U+1F61C
    {"\xf0\x9f\x98\x9d", "stuck_out_tongue_and_tightly_closed_eyes"},  // U+1F61D
    {"\xf0\x9f\x98\x9e", "disappointed_face"},  // U+1F61E
    {"\xf0\x9f\x98\x9f", "worried_face"},  // U+1F61F
    {"\xf0\x9f\x98\xa0", "angry_face"},  // U+1F620
    {"\xf0\x9f\x98\xa1", "pouting_face"},  // U+1F621
    {"\xf0\x9f\x98\xa2", "crying_face"},  // U+1F622
    {"\xf0\x9f\x98\xa3", "persevering_face"},  // U+1F623
    {"\xf0\x9f\x98\xa4", "look_of_triumph"},  // U+1F624
    {"\xf0\x9f\x98\xa5", "disappointed_but_relieved_face"},  // U+1F625
    {"\xf0\x9f\x98\xa6", "frowning_open_mouth"},  // U+1F626
    {"\xf0\x9f\x98\xa7", "anguished_face"},  // U+1F627
    {"\xf0\x9f\x98\xa8", "fearful_face"},  // U+1F628
    {"\xf0\x9f\x98\xa9", "weary_face"},  // U+1F629
    {"\xf0\x9f\x98\xaa", "sleepy_face"},  // U+1F62A
    {"\xf0\x9f\x98\xab", "tired_face"},  // U+1F62B
    {"\xf0\x9f\x98\xac", "grimacing_face"},  // U+1F62C
    {"\xf0\x9f\x98\xad", "loudly_crying_face"},  // U+1F62D
    {"\xf0\x9f\x98\xae", "open_mouth"},  // U+1F62E
    {"\xf0\x9f\x98\xaf", "hushed_face"},  // U+1F62F
    {"\xf0\x9f\x98\xb0", "open_mouth_and_cold_sweat"},  // U+1F630
    {"\xf0\x9f\x98\xb1", "face_screaming_in_fear"},  // U+1F631
    {"\xf0\x9f\x98\xb2", "astonished_face"},  // U+1F632
    {"\xf0\x9f\x98\xb3", "flushed_face"},  // U+1F633
    {"\xf0\x9f\x98\xb4", "sleeping_face"},  // U+1F634
    {"\xf0\x9f\x98\xb5", "dizzy_face"},  // U+1F635
    {"\xf0\x9f\x98\xb6", "face_without_mouth"},  // U+1F636
    {"\xf0\x9f\x98\xb7", "medical_mask"},  // U+1F637
    {"\xf0\x9f\x98\xb8", "grinning_cat_smiling_eyes"},  // U+1F638
    {"\xf0\x9f\x98\xb9", "cat_tears_of_joy"},  // U+1F639
    {"\xf0\x9f\x98\xba", "smiling_cat_open_mouth"},  // U+1F63A
    {"\xf0\x9f\x98\xbb", "smiling_cat_heart_shaped_eyes"},  // U+1F63B
    {"\xf0\x9f\x98\xbc", "cat_wry_smile"},  // U+1F63C
    {"\xf0\x9f\x98\xbd", "kissing_cat_closed_eyes"},  // U+1F63D
    {"\xf0\x9f\x98\xbe", "pouting_cat_face"},  // U+1F63E
    {"\xf0\x9f\x98\xbf", "crying_cat_face"},  // U+1F63F
    {"\xf0\x9f\x99\x80", "weary_cat_face"},  // U+1F640
    {"\xf0\x9f\x99\x81", "slightly_frowning_face"},  // U+1F641
    {"\xf0\x9f\x99\x82", "slightly_smiling_face"},  // U+1F642
    {"\xf0\x9f\x99\x83", "upside_down_face"},  // U+1F643
    {"\xf0\x9f\x99\x84", "rolling_eyes"},  // U+1F644
    {"\xf0\x9f\x99\x85", "no_good_gesture"},  // U+1F645
    {"\xf0\x9f\x99\x86", "ok_gesture"},  // U+1F646
    {"\xf0\x9f\x99\x87", "person_bowing_deeply"},  // U+1F647
    {"\xf0\x9f\x99\x88", "see_no_evil_monkey"},  // U+1F648
    {"\xf0\x9f\x99\x89", "hear_no_evil_monkey"},  // U+1F649
    {"\xf0\x9f\x99\x8a", "speak_no_evil_monkey"},  // U+1F64A
    {"\xf0\x9f\x99\x8b", "happy_person_raising_one_hand"},  // U+1F64B
    {"\xf0\x9f\x99\x8c", "person_raising_both_hands_in_celebration"},  // U+1F64C
    {"\xf0\x9f\x99\x8d", "person_frowning"},  // U+1F64D
    {"\xf0\x9f\x99\x8e", "person_with_pouting_face"},  // U+1F64E
    {"\xf0\x9f\x99\x8f", "person_with_folded_hands"},  // U+1F64F
    {"\xf0\x9f\x9a\xa8", "police_cars_revolving_light"},  // U+1F6A8
    {"\xf0\x9f\xa4\x8d", "white_heart"},  // U+1F90D
    {"\xf0\x9f\xa4\x8e", "brown_heart"},  // U+1F90E
    {"\xf0\x9f\xa4\x90", "zipper_mouth_face"},  // U+1F910
    {"\xf0\x9f\xa4\x91", "money_mouth_face"},  // U+1F911
    {"\xf0\x9f\xa4\x92", "thermometer"},  // U+1F912
    {"\xf0\x9f\xa4\x93", "nerd_face"},  // U+1F913
    {"\xf0\x9f\xa4\x94", "thinking_face"},  // U+1F914
    {"\xf0\x9f\xa4\x95", "head_bandage"},  // U+1F915
    {"\xf0\x9f\xa4\x96", "robot_face"},  // U+1F916
    {"\xf0\x9f\xa4\x97", "hugging_face"},  // U+1F917
    {"\xf0\x9f\xa4\x98", "sign_of_the_horns"},  // U+1F918
    {"\xf0\x9f\xa4\x99", "call_me_hand"},  // U+1F919
    {"\xf0\x9f\xa4\x9a", "raised_back_of_hand"},  // U+1F91A
    {"\xf0\x9f\xa4\x9b", "left_facing_fist"},  // U+1F91B
    {"\xf0\x9f\xa4\x9c", "right_facing_fist"},  // U+1F91C
    {"\xf0\x9f\xa4\x9d", "handshake"},  // U+1F91D
    {"\xf0\x9f\xa4\x9e", "hand_with_index_and_middle_fingers_crossed"},  // U+1F91E
    {"\xf0\x9f\xa4\x9f", "i_love_you_hand_sign"},  // U+1F91F
    {"\xf0\x9f\xa4\xa0", "cowboy_hat"},  // U+1F920
    {"\xf0\x9f\xa4\xa1", "clown_face"},  // U+1F921
    {"\xf0\x9f\xa4\xa2", "nauseated_face"},  // U+1F922
    {"\xf0\x9f\xa4\xa3", "rolling_on_the_floor_laughing"},  // U+1F923
    {"\xf0\x9f\xa4\xa4", "drooling_face"},  // U+1F924
    {"\xf0\x9f\xa4\xa5", "lying_face"},  // U+1F925
    {"\xf0\x9f\xa4\xa6", "face_palm"},  // U+1F926
    {"\xf0\x9f\xa4\xa7", "sneezing_face"},  // U+1F927
    {"\xf0\x9f\xa4\xa8", "one_eyebrow_raised"},  // U+1F928
    {"\xf0\x9f\xa4\xa9", "grinning_star_eyes"},  // U+1F929
    {"\xf0\x9f\xa4\xaa", "grinning_one_large_and_one_small_eye"},  // U+1F92A
    {"\xf0\x9f\xa4\xab", "finger_covering_closed_lips"},  // U+1F92B
    {"\xf0\x9f\xa4\xac", "serious_symbols_covering_mouth"},  // U+1F92C
    {"\xf0\x9f\xa4\xad", "smiling_smiling_eyes_and_hand_covering_mouth"},  // U+1F92D
    {"\xf0\x9f\xa4\xae", "open_mouth_vomiting"},  // U+1F92E
    {"\xf0\x9f\xa4\xaf", "shocked_exploding_head"},  // U+1F92F
    {"\xf0\x9f\xa4\xb7", "shrug"},  // U+1F937
    {"\xf0\x9f\xa5\xb0", "smiling_smiling_eyes_and_three_hearts"},  // U+1F970
    {"\xf0\x9f\xa5\xb1", "yawning_face"},  // U+1F971
    {"\xf0\x9f\xa5\xb2", "smiling_tear"},  // U+1F972
    {"\xf0\x9f\xa5\xb3", "party_horn_and_party_hat"},  // U+1F973
    {"\xf0\x9f\xa5\xb4", "uneven_eyes_and_wavy_mouth"},  // U+1F974
    {"\xf0\x9f\xa5\xb5", "overheated_face"},  // U+1F975
    {"\xf0\x9f\xa5\xb6", "freezing_face"},  // U+1F976
    {"\xf0\x9f\xa5\xba", "pleading_eyes"},  // U+1F97A
    {"\xf0\x9f\xa7\xa1", "orange_heart"},  // U+1F9E1
};
}  // namespace

EmojiMap EmojiMap::builtin() {
  EmojiMap map;
  for (const auto& e : kBuiltinEmoji) {
    map.add(e.utf8, e.name);
    // emoji-presentation variant (VS16 suffix) maps to the same name
    map.add(std::string(e.utf8) + "\xef\xb8\x8f", e.name);
  }
  return map;
}

}  // namespace codemix

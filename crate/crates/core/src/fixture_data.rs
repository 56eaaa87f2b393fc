// Embedded fixture data: partition-logic index sets and published vector labelings,
// transcribed as exact radical expressions (f64-evaluated) and cross-validated against
// the reconstruction oracles in tests. Generated mechanically; do not edit by hand.
#![allow(clippy::neg_multiply)] // the emitter spells signs as (-1) * x; keep the data verbatim

pub static SMALL_PARTITION_SETS: [&[u16]; 15] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    &[11, 12, 13, 14, 15, 16, 17, 18],
    &[19, 20, 21, 22, 23, 24],
    &[1, 2, 3, 4, 11, 12, 13, 14],
    &[5, 6, 7, 8, 9, 10, 15, 16, 17, 18],
    &[1, 5, 6, 11, 12, 15, 16, 17, 19, 20],
    &[2, 3, 7, 8, 9, 21, 22, 23],
    &[4, 10, 13, 14, 18, 24],
    &[5, 7, 8, 15, 16, 19, 21, 22],
    &[1, 2, 3, 6, 9, 11, 12, 17, 20, 23],
    &[2, 7, 9, 11, 13, 15, 17, 18, 21, 23],
    &[1, 4, 5, 6, 10, 19, 20, 24],
    &[3, 8, 12, 14, 16, 22],
    &[6, 9, 10, 17, 18, 20, 23, 24],
    &[1, 2, 4, 5, 7, 11, 13, 15, 19, 21],
];

pub static COMBO_PARTITION_SETS: [&[u16]; 36] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86],
    &[87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132, 133, 134, 135, 136, 137, 138, 139, 140, 141, 142, 143, 144, 145, 146, 147, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161],
    &[162, 163, 164, 165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177, 178, 179, 180, 181, 182, 183, 184, 185, 186, 187, 188, 189, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201, 202, 203, 204, 205, 206, 207, 208, 209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223, 224, 225],
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132, 133],
    &[51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86, 134, 135, 136, 137, 138, 139, 140, 141, 142, 143, 144, 145, 146, 147, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161],
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107, 162, 163, 164, 165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177, 178, 179, 180, 181, 182, 183, 184, 185, 186, 187, 188, 189],
    &[27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132, 133, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201, 202, 203, 204, 205, 206, 207, 208, 209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223, 224, 225],
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100, 101, 134, 135, 136, 137, 138, 139, 140, 141, 142, 143, 144, 145, 146, 147, 162, 163, 164, 165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177, 178, 179, 180, 181],
    &[15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86, 102, 103, 104, 105, 106, 107, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161, 182, 183, 184, 185, 186, 187, 188, 189],
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 87, 88, 89, 90, 91, 92, 93, 94, 95, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 134, 135, 136, 137, 138, 139, 162, 163, 164, 165, 166, 167, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201],
    &[96, 97, 98, 99, 100, 101, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132, 133, 140, 141, 142, 143, 144, 145, 146, 147, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177, 178, 179, 180, 181, 202, 203, 204, 205, 206, 207, 208, 209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223, 224, 225],
    &[87, 88, 89, 90, 91, 92, 93, 94, 95, 102, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 134, 135, 136, 137, 138, 139, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161, 162, 163, 164, 165, 166, 167, 182, 183, 184, 185, 186, 187, 188, 189, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201],
    &[1, 2, 3, 4, 15, 16, 17, 18, 27, 28, 29, 30, 31, 32, 51, 52, 53, 54, 63, 64, 65, 66, 67, 68, 87, 88, 89, 90, 91, 92, 96, 97, 102, 103, 104, 105, 106, 108, 109, 110, 111, 112, 113, 114, 115, 116, 122, 123, 124, 125, 134, 135, 136, 137, 138, 140, 141, 142, 148, 149, 150, 151, 152, 153, 154, 155, 156, 162, 163, 168, 169, 170, 171, 182, 183, 184, 190, 191, 192, 193, 202, 203, 204, 205, 206, 207],
    &[5, 6, 7, 8, 9, 10, 11, 19, 20, 21, 22, 23, 24, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 55, 56, 57, 58, 59, 60, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 164, 165, 166, 172, 173, 174, 175, 176, 177, 178, 185, 186, 187, 188, 194, 195, 196, 197, 198, 199, 208, 209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219],
    &[12, 13, 14, 25, 26, 45, 46, 47, 48, 49, 50, 61, 62, 81, 82, 83, 84, 85, 86, 93, 94, 95, 98, 99, 100, 101, 107, 117, 118, 119, 120, 121, 126, 127, 128, 129, 130, 131, 132, 133, 139, 143, 144, 145, 146, 147, 157, 158, 159, 160, 161, 167, 179, 180, 181, 189, 200, 201, 220, 221, 222, 223, 224, 225],
    &[1, 2, 5, 6, 7, 8, 15, 19, 27, 28, 29, 30, 33, 34, 35, 36, 37, 38, 39, 40, 51, 52, 53, 55, 56, 57, 58, 59, 63, 64, 65, 66, 69, 70, 71, 72, 73, 74, 75, 76, 87, 88, 89, 96, 102, 108, 109, 110, 111, 112, 113, 122, 123, 134, 135, 136, 137, 140, 141, 148, 149, 150, 151, 152, 153, 162, 164, 165, 166, 168, 169, 172, 173, 174, 175, 182, 185, 190, 191, 192, 194, 195, 196, 197, 198, 202, 203, 204, 205, 208, 209, 210, 211, 212, 213, 214, 215],
    &[3, 4, 9, 10, 11, 16, 17, 18, 20, 21, 22, 23, 24, 31, 32, 41, 42, 43, 44, 54, 60, 67, 68, 77, 78, 79, 80, 90, 91, 92, 97, 103, 104, 105, 106, 114, 115, 116, 124, 125, 138, 142, 154, 155, 156, 163, 170, 171, 176, 177, 178, 183, 184, 186, 187, 188, 193, 199, 206, 207, 216, 217, 218, 219],
    &[27, 28, 29, 33, 34, 35, 36, 37, 45, 46, 47, 48, 51, 52, 55, 56, 57, 61, 63, 64, 65, 69, 70, 71, 72, 73, 81, 82, 83, 84, 108, 109, 110, 111, 117, 118, 119, 122, 126, 127, 128, 129, 130, 134, 135, 136, 140, 143, 144, 145, 148, 149, 150, 151, 157, 158, 159, 190, 191, 194, 195, 196, 200, 202, 203, 204, 208, 209, 210, 211, 212, 220, 221, 222, 223],
    &[1, 2, 5, 6, 7, 8, 12, 13, 14, 15, 19, 25, 26, 30, 38, 39, 40, 49, 50, 53, 58, 59, 62, 66, 74, 75, 76, 85, 86, 87, 88, 89, 93, 94, 95, 96, 98, 99, 100, 101, 102, 107, 112, 113, 120, 121, 123, 131, 132, 133, 137, 139, 141, 146, 147, 152, 153, 160, 161, 162, 164, 165, 166, 167, 168, 169, 172, 173, 174, 175, 179, 180, 181, 182, 185, 189, 192, 197, 198, 201, 205, 213, 214, 215, 224, 225],
    &[16, 17, 20, 21, 22, 23, 27, 28, 31, 33, 34, 35, 36, 41, 42, 45, 46, 47, 63, 64, 67, 69, 70, 71, 72, 77, 78, 81, 82, 83, 103, 104, 105, 108, 109, 110, 114, 117, 118, 119, 122, 124, 126, 127, 128, 129, 148, 149, 150, 154, 157, 158, 159, 183, 186, 187, 188, 190, 194, 195, 196, 199, 200, 202, 203, 206, 208, 209, 210, 211, 216, 217, 220, 221, 222],
    &[3, 4, 9, 10, 11, 18, 24, 29, 32, 37, 43, 44, 48, 51, 52, 54, 55, 56, 57, 60, 61, 65, 68, 73, 79, 80, 84, 90, 91, 92, 97, 106, 111, 115, 116, 125, 130, 134, 135, 136, 138, 140, 142, 143, 144, 145, 151, 155, 156, 163, 170, 171, 176, 177, 178, 184, 191, 193, 204, 207, 212, 218, 219, 223],
    &[1, 2, 5, 6, 7, 12, 15, 16, 17, 19, 20, 21, 22, 25, 27, 28, 30, 31, 33, 34, 35, 38, 39, 41, 45, 49, 53, 58, 63, 64, 66, 67, 69, 70, 71, 74, 75, 77, 81, 85, 87, 88, 89, 96, 98, 99, 100, 102, 103, 104, 105, 108, 109, 110, 112, 113, 114, 122, 123, 124, 126, 127, 128, 131, 132, 137, 141, 146, 148, 149, 150, 152, 153, 154, 162, 168, 169, 172, 173, 174, 179, 182, 183, 190, 192, 202, 203, 205, 206, 208, 209, 210, 213, 214, 216, 220, 224],
    &[8, 13, 14, 23, 26, 36, 40, 42, 46, 47, 50, 59, 62, 72, 76, 78, 82, 83, 86, 93, 94, 95, 101, 107, 117, 118, 119, 120, 121, 129, 133, 139, 147, 157, 158, 159, 160, 161, 164, 165, 166, 167, 175, 180, 181, 185, 186, 187, 188, 189, 194, 195, 196, 197, 198, 199, 200, 201, 211, 215, 217, 221, 222, 225],
    &[5, 6, 7, 9, 10, 11, 12, 19, 20, 21, 22, 24, 25, 33, 34, 35, 37, 38, 39, 41, 43, 44, 45, 48, 49, 55, 56, 57, 58, 60, 61, 69, 70, 71, 73, 74, 75, 77, 79, 80, 81, 84, 85, 98, 99, 100, 126, 127, 128, 130, 131, 132, 143, 144, 145, 146, 172, 173, 174, 176, 177, 178, 179, 208, 209, 210, 212, 213, 214, 216, 218, 219, 220, 223, 224],
    &[5, 6, 9, 10, 19, 20, 21, 24, 33, 34, 37, 38, 41, 43, 55, 56, 58, 60, 69, 70, 73, 74, 77, 79, 87, 88, 90, 91, 93, 94, 98, 99, 102, 103, 104, 106, 107, 108, 109, 111, 112, 114, 115, 117, 118, 120, 126, 127, 130, 131, 134, 135, 137, 138, 139, 143, 144, 146, 148, 149, 151, 152, 154, 155, 157, 158, 160, 164, 165, 172, 173, 176, 177, 185, 186, 187, 194, 195, 197, 199, 208, 209, 212, 213, 216, 218],
    &[1, 2, 3, 4, 12, 13, 14, 15, 16, 17, 18, 25, 26, 27, 28, 29, 30, 31, 32, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 61, 62, 63, 64, 65, 66, 67, 68, 81, 82, 83, 84, 85, 86, 162, 163, 167, 168, 169, 170, 171, 179, 180, 181, 182, 183, 184, 189, 190, 191, 192, 193, 200, 201, 202, 203, 204, 205, 206, 207, 220, 221, 222, 223, 224, 225],
    &[7, 8, 11, 22, 23, 35, 36, 39, 40, 42, 44, 57, 59, 71, 72, 75, 76, 78, 80, 89, 92, 95, 96, 97, 100, 101, 105, 110, 113, 116, 119, 121, 122, 123, 124, 125, 128, 129, 132, 133, 136, 140, 141, 142, 145, 147, 150, 153, 156, 159, 161, 166, 174, 175, 178, 188, 196, 198, 210, 211, 214, 215, 217, 219],
    &[1, 3, 5, 9, 12, 13, 16, 20, 27, 30, 31, 32, 33, 38, 41, 43, 45, 46, 49, 50, 51, 53, 54, 55, 58, 60, 61, 62, 63, 66, 67, 68, 69, 74, 77, 79, 81, 82, 85, 86, 87, 90, 93, 98, 103, 108, 112, 114, 115, 117, 120, 126, 131, 134, 137, 138, 139, 143, 146, 148, 152, 154, 155, 157, 160, 162, 163, 164, 167, 168, 170, 172, 176, 179, 180, 183, 186, 190, 192, 193, 194, 197, 199, 200, 201, 202, 205, 206, 207, 208, 213, 216, 218, 220, 221, 224, 225],
    &[2, 4, 6, 10, 14, 15, 17, 18, 19, 21, 24, 25, 26, 28, 29, 34, 37, 47, 48, 52, 56, 64, 65, 70, 73, 83, 84, 88, 91, 94, 99, 102, 104, 106, 107, 109, 111, 118, 127, 130, 135, 144, 149, 151, 158, 165, 169, 171, 173, 177, 181, 182, 184, 185, 187, 189, 191, 195, 203, 204, 209, 212, 222, 223],
    &[30, 31, 32, 38, 39, 40, 41, 42, 43, 44, 49, 50, 53, 54, 58, 59, 60, 62, 66, 67, 68, 74, 75, 76, 77, 78, 79, 80, 85, 86, 112, 113, 114, 115, 116, 120, 121, 123, 124, 125, 131, 132, 133, 137, 138, 139, 141, 142, 146, 147, 152, 153, 154, 155, 156, 160, 161, 192, 193, 197, 198, 199, 201, 205, 206, 207, 213, 214, 215, 216, 217, 218, 219, 224, 225],
    &[1, 3, 5, 7, 8, 9, 11, 12, 13, 16, 20, 22, 23, 27, 33, 35, 36, 45, 46, 51, 55, 57, 61, 63, 69, 71, 72, 81, 82, 87, 89, 90, 92, 93, 95, 96, 97, 98, 100, 101, 103, 105, 108, 110, 117, 119, 122, 126, 128, 129, 134, 136, 140, 143, 145, 148, 150, 157, 159, 162, 163, 164, 166, 167, 168, 170, 172, 174, 175, 176, 178, 179, 180, 183, 186, 188, 190, 194, 196, 200, 202, 208, 210, 211, 220, 221],
    &[15, 18, 19, 24, 25, 26, 29, 30, 32, 37, 38, 39, 40, 43, 44, 48, 49, 50, 65, 66, 68, 73, 74, 75, 76, 79, 80, 84, 85, 86, 102, 106, 107, 111, 112, 113, 115, 116, 120, 121, 123, 125, 130, 131, 132, 133, 151, 152, 153, 155, 156, 160, 161, 182, 184, 185, 189, 191, 192, 193, 197, 198, 201, 204, 205, 207, 212, 213, 214, 215, 218, 219, 223, 224, 225],
    &[2, 4, 6, 10, 14, 17, 21, 28, 31, 34, 41, 42, 47, 52, 53, 54, 56, 58, 59, 60, 62, 64, 67, 70, 77, 78, 83, 88, 91, 94, 99, 104, 109, 114, 118, 124, 127, 135, 137, 138, 139, 141, 142, 144, 146, 147, 149, 154, 158, 165, 169, 171, 173, 177, 181, 187, 195, 199, 203, 206, 209, 216, 217, 222],
    &[1, 3, 5, 8, 9, 13, 15, 16, 18, 19, 20, 23, 24, 26, 27, 29, 30, 32, 33, 36, 37, 38, 40, 43, 46, 50, 51, 55, 63, 65, 66, 68, 69, 72, 73, 74, 76, 79, 82, 86, 87, 90, 93, 96, 97, 98, 101, 102, 103, 106, 107, 108, 111, 112, 115, 117, 120, 122, 123, 125, 126, 129, 130, 131, 133, 134, 140, 143, 148, 151, 152, 155, 157, 160, 164, 168, 170, 172, 175, 176, 180, 185, 186, 194, 197, 202, 204, 205, 207, 208, 211, 212, 213, 215, 218, 221, 225],
    &[7, 11, 12, 22, 25, 35, 39, 44, 45, 48, 49, 57, 61, 71, 75, 80, 81, 84, 85, 89, 92, 95, 100, 105, 110, 113, 116, 119, 121, 128, 132, 136, 145, 150, 153, 156, 159, 161, 162, 163, 166, 167, 174, 178, 179, 182, 183, 184, 188, 189, 190, 191, 192, 193, 196, 198, 200, 201, 210, 214, 219, 220, 223, 224],
    &[1, 2, 3, 4, 8, 13, 14, 15, 16, 17, 18, 23, 26, 27, 28, 29, 30, 31, 32, 36, 40, 42, 46, 47, 50, 51, 52, 53, 54, 59, 62, 63, 64, 65, 66, 67, 68, 72, 76, 78, 82, 83, 86, 96, 97, 101, 122, 123, 124, 125, 129, 133, 140, 141, 142, 147, 168, 169, 170, 171, 175, 180, 181, 202, 203, 204, 205, 206, 207, 211, 215, 217, 221, 222, 225],
];

pub fn heuristic_small_vectors() -> Vec<[f64; 3]> {
    vec![
        [(1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (3.0_f64 / 10.0_f64) * 2.0_f64.sqrt(), (-2.0_f64 / 5.0_f64) * 2.0_f64.sqrt()],
        [(1.0_f64 / 3.0_f64) * 3.0_f64.sqrt(), (-7.0_f64 / 15.0_f64) * 3.0_f64.sqrt(), (1.0_f64 / 15.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 3.0_f64) * 3.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt(), (-1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), 0.0_f64],
        [(1.0_f64 / 6.0_f64) * 2.0_f64.sqrt(), (-8.0_f64 / 15.0_f64) * 2.0_f64.sqrt(), (13.0_f64 / 30.0_f64) * 2.0_f64.sqrt()],
        [(1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (2.0_f64 / 5.0_f64) * 2.0_f64.sqrt(), (3.0_f64 / 10.0_f64) * 2.0_f64.sqrt()],
        [(-2.0_f64 / 3.0_f64), (1.0_f64 / 3.0_f64), (2.0_f64 / 3.0_f64)],
        [(1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), 0.0_f64, (1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 2.0_f64.sqrt(), (2.0_f64 / 3.0_f64) * 2.0_f64.sqrt(), (-1.0_f64 / 6.0_f64) * 2.0_f64.sqrt()],
        [(-1.0_f64 / 14.0_f64) * 14.0_f64.sqrt(), (9.0_f64 / 35.0_f64) * 14.0_f64.sqrt(), (1.0_f64 / 70.0_f64) * 14.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 15.0_f64) * 6.0_f64.sqrt(), (-11.0_f64 / 30.0_f64) * 6.0_f64.sqrt()],
        [(4.0_f64 / 21.0_f64) * 21.0_f64.sqrt(), (1.0_f64 / 21.0_f64) * 21.0_f64.sqrt(), (2.0_f64 / 21.0_f64) * 21.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 14.0_f64) * 14.0_f64.sqrt(), (1.0_f64 / 7.0_f64) * 14.0_f64.sqrt(), (-3.0_f64 / 14.0_f64) * 14.0_f64.sqrt()],
    ]
}

pub fn combo_vectors_alpha_pi3() -> Vec<[f64; 3]> {
    vec![
        [(1.0_f64 / 10.0_f64) * 30.0_f64.sqrt(), (-1.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 3.0_f64) * 6.0_f64.sqrt(), 0.0_f64, (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(-1.0_f64 / 30.0_f64) * 30.0_f64.sqrt(), (-3.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 14.0_f64) * ((209.0_f64 / 15.0_f64) + (-3.0_f64 / 5.0_f64) * 65.0_f64.sqrt()).sqrt(), (1.0_f64 / 140.0_f64) * 2.0_f64.sqrt() * (-5.0_f64 + (-3.0_f64) * 65.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [((-3.0_f64 / 28.0_f64) * 78.0_f64.sqrt() + (-1.0_f64 / 420.0_f64) * 30.0_f64.sqrt()), (1.0_f64 / 14.0_f64) * ((37.0_f64 / 5.0_f64) + (-3.0_f64 / 5.0_f64) * 65.0_f64.sqrt()).sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(-1.0_f64 / 42.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 14.0_f64) * 130.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 140.0_f64) * 30.0_f64.sqrt() * (-1.0_f64 + 65.0_f64.sqrt()), (1.0_f64 / 140.0_f64) * 10.0_f64.sqrt() * (1.0_f64 + 3.0_f64 * 65.0_f64.sqrt()), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 84.0_f64) * 6.0_f64.sqrt() * (-1.0_f64 + 3.0_f64 * 65.0_f64.sqrt()), (1.0_f64 / 14.0_f64) * (33.0_f64 + 65.0_f64.sqrt()).sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((1.0_f64 / 14.0_f64) * 78.0_f64.sqrt() + (1.0_f64 / 105.0_f64) * 30.0_f64.sqrt()), ((-1.0_f64 / 7.0_f64) * 26.0_f64.sqrt() + (1.0_f64 / 70.0_f64) * 10.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(2910.0_f64 + 360.0_f64 * 65.0_f64.sqrt()).sqrt().recip(), (1.0_f64 / 70.0_f64) * 2.0_f64.sqrt() * (10.0_f64 + 65.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [(-2.0_f64 / 15.0_f64) * 30.0_f64.sqrt(), (-1.0_f64 / 5.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [0.0_f64, (1.0_f64 / 5.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 30.0_f64.sqrt(), (1.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 84.0_f64) * 6.0_f64.sqrt() * (-3.0_f64 + 65.0_f64.sqrt()), (1.0_f64 / 14.0_f64) * ((69.0_f64 / 5.0_f64) + 65.0_f64.sqrt()).sqrt(), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [((1.0_f64 / 28.0_f64) * 78.0_f64.sqrt() + (1.0_f64 / 84.0_f64) * 30.0_f64.sqrt()), ((-5.0_f64 / 28.0_f64) * 26.0_f64.sqrt() + (1.0_f64 / 140.0_f64) * 10.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [((-1.0_f64 / 28.0_f64) * 390.0_f64.sqrt() + (1.0_f64 / 84.0_f64) * 6.0_f64.sqrt()), (-1.0_f64 / 14.0_f64) * (33.0_f64 + 65.0_f64.sqrt()).sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(-1.0_f64 / 14.0_f64) * 78.0_f64.sqrt(), (-1.0_f64 / 70.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(-1.0_f64 / 14.0_f64) * ((293.0_f64 / 3.0_f64) + 65.0_f64.sqrt()).sqrt(), (1.0_f64 / 28.0_f64) * 2.0_f64.sqrt() * (-1.0_f64 + 65.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 14.0_f64) * ((61.0_f64 / 3.0_f64) + (-1.0_f64) * 65.0_f64.sqrt()).sqrt(), (1.0_f64 / 14.0_f64) * ((813.0_f64 / 5.0_f64) + 65.0_f64.sqrt()).sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 84.0_f64) * 6.0_f64.sqrt() * (-3.0_f64 + (-1.0_f64) * 65.0_f64.sqrt()), (-1.0_f64 / 14.0_f64) * ((69.0_f64 / 5.0_f64) + (-1.0_f64) * 65.0_f64.sqrt()).sqrt(), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 30.0_f64.sqrt(), (-1.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(-1.0_f64 / 10.0_f64) * 30.0_f64.sqrt(), (-1.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(-2.0_f64 / 15.0_f64) * 30.0_f64.sqrt(), (1.0_f64 / 5.0_f64) * 10.0_f64.sqrt(), (1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 210.0_f64) * 6.0_f64.sqrt() * (-15.0_f64 + (-2.0_f64) * 65.0_f64.sqrt()), (1.0_f64 / 70.0_f64) * 2.0_f64.sqrt() * (-10.0_f64 + 65.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [((-1.0_f64 / 105.0_f64) * 30.0_f64.sqrt() + (1.0_f64 / 14.0_f64) * 78.0_f64.sqrt()), ((1.0_f64 / 7.0_f64) * 26.0_f64.sqrt() + (1.0_f64 / 70.0_f64) * 10.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [((1.0_f64 / 28.0_f64) * 390.0_f64.sqrt() + (1.0_f64 / 84.0_f64) * 6.0_f64.sqrt()), (1.0_f64 / 28.0_f64) * 2.0_f64.sqrt() * (1.0_f64 + (-1.0_f64) * 65.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(1.0_f64 / 140.0_f64) * 30.0_f64.sqrt() * (1.0_f64 + 65.0_f64.sqrt()), (1.0_f64 / 140.0_f64) * 10.0_f64.sqrt() * (1.0_f64 + (-3.0_f64) * 65.0_f64.sqrt()), (-1.0_f64 / 5.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 42.0_f64) * 6.0_f64.sqrt(), (-1.0_f64 / 14.0_f64) * 130.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-3.0_f64 / 28.0_f64) * 78.0_f64.sqrt() + (1.0_f64 / 420.0_f64) * 30.0_f64.sqrt()), (-1.0_f64 / 14.0_f64) * ((37.0_f64 / 5.0_f64) + (3.0_f64 / 5.0_f64) * 65.0_f64.sqrt()).sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(1.0_f64 / 420.0_f64) * 6.0_f64.sqrt() * (45.0_f64 + 65.0_f64.sqrt()), (1.0_f64 / 140.0_f64) * 2.0_f64.sqrt() * (5.0_f64 + (-3.0_f64) * 65.0_f64.sqrt()), (-1.0_f64 / 15.0_f64) * 195.0_f64.sqrt()],
        [(-1.0_f64 / 30.0_f64) * 30.0_f64.sqrt(), (3.0_f64 / 10.0_f64) * 10.0_f64.sqrt(), (-1.0_f64 / 15.0_f64) * 15.0_f64.sqrt()],
        [(-1.0_f64 / 3.0_f64) * 6.0_f64.sqrt(), 0.0_f64, (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
    ]
}

pub fn combo_vectors_alpha_pi2() -> Vec<[f64; 3]> {
    vec![
        [(1.0_f64 / 2.0_f64), (-1.0_f64 / 2.0_f64), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [(1.0_f64 / 3.0_f64) * 6.0_f64.sqrt(), 0.0_f64, (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 3.0_f64.sqrt(), (-1.0_f64 / 2.0_f64) * 3.0_f64.sqrt(), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 5.0_f64) * ((29.0_f64 / 6.0_f64) + 6.0_f64.sqrt()).sqrt(), (1.0_f64 / 10.0_f64) * 2.0_f64.sqrt() * (-1.0_f64 + 6.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [((-1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() + (3.0_f64 / 5.0_f64) * 2.0_f64.sqrt()), (-1.0_f64 / 10.0_f64) * (11.0_f64 + 4.0_f64 * 6.0_f64.sqrt()).sqrt(), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(-1.0_f64 / 15.0_f64) * 6.0_f64.sqrt(), (-4.0_f64 / 5.0_f64), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-1.0_f64 / 10.0_f64) + (-1.0_f64 / 5.0_f64) * 6.0_f64.sqrt()), ((1.0_f64 / 10.0_f64) + (-1.0_f64 / 5.0_f64) * 6.0_f64.sqrt()), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [(-4.0_f64 / 5.0_f64), (1.0_f64 / 15.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-1.0_f64 / 5.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 3.0_f64.sqrt()), ((1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() + (3.0_f64 / 5.0_f64) * 2.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(-1.0_f64 / 5.0_f64) * ((7.0_f64 / 2.0_f64) + 6.0_f64.sqrt()).sqrt(), (1.0_f64 / 5.0_f64) * ((29.0_f64 / 6.0_f64) + (-1.0_f64) * 6.0_f64.sqrt()).sqrt(), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [(-1.0_f64 / 2.0_f64) * 3.0_f64.sqrt(), (-1.0_f64 / 6.0_f64) * 3.0_f64.sqrt(), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [0.0_f64, (-1.0_f64 / 3.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), ((1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((3.0_f64 / 4.0_f64) + (1.0_f64 / 12.0_f64) * 3.0_f64.sqrt()), ((-1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [((-3.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 6.0_f64.sqrt()), ((1.0_f64 / 10.0_f64) + (-1.0_f64 / 10.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (3.0_f64 / 20.0_f64) * 6.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [((3.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 60.0_f64) * 3.0_f64.sqrt()), ((-1.0_f64 / 20.0_f64) + (1.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 3.0_f64.sqrt() + (3.0_f64 / 10.0_f64) * 6.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() * (12.0_f64 + 2.0_f64.sqrt()), ((2.0_f64 / 5.0_f64) + (-1.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((1.0_f64 / 20.0_f64) + (-1.0_f64 / 20.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (3.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), ((-1.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 20.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt()), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [((2.0_f64 / 5.0_f64) + (-1.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() * (-12.0_f64 + (-1.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-1.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * (11.0_f64 + (-4.0_f64) * 6.0_f64.sqrt()).sqrt()), ((3.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (-1.0_f64 / 60.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [((1.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 2.0_f64.sqrt()), ((-3.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 20.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 30.0_f64) * 3.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [((1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), ((-3.0_f64 / 4.0_f64) + (1.0_f64 / 12.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-1.0_f64 / 4.0_f64) + (-1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), ((1.0_f64 / 4.0_f64) + (-1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [(-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((-3.0_f64 / 4.0_f64) + (1.0_f64 / 12.0_f64) * 3.0_f64.sqrt()), ((1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [((3.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 20.0_f64) * 6.0_f64.sqrt() + (-1.0_f64 / 30.0_f64) * 3.0_f64.sqrt()), ((-1.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 6.0_f64.sqrt() + (-1.0_f64 / 10.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [((-3.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 60.0_f64) * 3.0_f64.sqrt()), ((1.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(1.0_f64 / 30.0_f64) * 3.0_f64.sqrt() * (-12.0_f64 + 2.0_f64.sqrt()), ((2.0_f64 / 5.0_f64) + (1.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((1.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 3.0_f64.sqrt()), ((-1.0_f64 / 20.0_f64) + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 3.0_f64.sqrt() + (3.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), (-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt()],
        [((2.0_f64 / 5.0_f64) + (1.0_f64 / 10.0_f64) * 2.0_f64.sqrt()), (1.0_f64 / 5.0_f64) * ((73.0_f64 / 6.0_f64) + (-2.0_f64) * 2.0_f64.sqrt()).sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
        [((1.0_f64 / 20.0_f64) + (1.0_f64 / 20.0_f64) * (11.0_f64 + (-4.0_f64) * 6.0_f64.sqrt()).sqrt() + (3.0_f64 / 10.0_f64) * 6.0_f64.sqrt()), ((-3.0_f64 / 20.0_f64) + (-3.0_f64 / 10.0_f64) * 2.0_f64.sqrt() + (-1.0_f64 / 60.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 10.0_f64) * 6.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [((-1.0_f64 / 10.0_f64) + (1.0_f64 / 10.0_f64) * 3.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (3.0_f64 / 20.0_f64) * 6.0_f64.sqrt()), ((3.0_f64 / 10.0_f64) + (-3.0_f64 / 20.0_f64) * 2.0_f64.sqrt() + (1.0_f64 / 20.0_f64) * 6.0_f64.sqrt() + (1.0_f64 / 30.0_f64) * 3.0_f64.sqrt()), (1.0_f64 / 3.0_f64) * 6.0_f64.sqrt()],
        [((-1.0_f64 / 4.0_f64) + (1.0_f64 / 4.0_f64) * 3.0_f64.sqrt()), ((3.0_f64 / 4.0_f64) + (1.0_f64 / 12.0_f64) * 3.0_f64.sqrt()), (-1.0_f64 / 6.0_f64) * 6.0_f64.sqrt()],
        [(-1.0_f64 / 2.0_f64) * 2.0_f64.sqrt(), (1.0_f64 / 6.0_f64) * 6.0_f64.sqrt(), (1.0_f64 / 3.0_f64) * 3.0_f64.sqrt()],
    ]
}


"""Gray images: a Z2Z4 code seen as a binary code of length alpha + 2 beta.

Lee distance upstairs equals Hamming distance downstairs, checked here over
every pair of codewords of a small code.
"""

import numpy as np

from z2z4 import new_code
from z2z4.code import codeword_array
from z2z4.graymap import gray_array

c = new_code(2, 2, [[1, 1, 2, 0], [0, 1, 1, 1]])
words = codeword_array(c)
images = gray_array(words, c.alpha)

for w, g in zip(words.tolist(), images.tolist()):
    print(w[: c.alpha], w[c.alpha:], "->", "".join(map(str, g)))

ham = (images[:, None, :] != images[None, :, :]).sum(axis=-1)
diff = (words[:, None, :] - words[None, :, :])
diff[..., : c.alpha] %= 2
diff[..., c.alpha:] %= 4
lee = (diff[..., : c.alpha] != 0).sum(-1) + np.minimum(diff[..., c.alpha:], 4 - diff[..., c.alpha:]).sum(-1)
print("\nLee distance == Hamming distance on all", len(words) ** 2, "pairs:", bool((ham == lee).all()))
print("minimum distance of the image:", int(ham[ham > 0].min()))

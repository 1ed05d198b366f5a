"""
argsum - Argumentation-aware extractive summarization

This package provides tools to:
1. Segment a document into sentences and tokens
2. Detect argumentative connectives (but, therefore, a little, ...)
3. Read each sentence's argumentative orientation through a base of topoi
4. Score sentences by keywords and connectives, Score = C_w * W_w
5. Emit the top-ranked sentences plus the conclusions they argue for

Built for texts where argumentation matters: "The weather is beautiful but
I have to work" and "I have to work but the weather is beautiful" share
every content word yet argue toward opposite conclusions.
"""

__version__ = "0.1.0"
__author__ = "argsum developers"

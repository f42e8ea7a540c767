"""Builtin names understood by the command-line front end."""

BALL_ROW = "row"
BALL_POLYDISK = "polydisk"
BALL_COLUMN = "column"
BALL_PENCIL = "pencil"

REALIZATION_EX52 = "ex52"

TARGET_DELTA_PREFIX = "delta"
TARGET_RESOLVENT = "resolvent"

PATH_BUILTIN = "builtin"

REPRODUCE_TARGETS = ("ex52", "ex53", "ex412", "gleason")

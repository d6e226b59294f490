"""Test helpers."""

import numpy as np

from irsmec.channel import ChannelSet


def make_channels(direct, cascaded):
    """以 IRS-AP 信道全为 1 构造信道，使 cascaded 等于 user_to_irs。"""
    cascaded = np.asarray(cascaded, dtype=complex).reshape(2, -1)
    return ChannelSet.from_links(direct, cascaded, np.ones(cascaded.shape[1]))

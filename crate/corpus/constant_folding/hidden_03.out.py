def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def low_bits(n):
    mask = 15
    return n & mask

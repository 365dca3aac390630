def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def low_bits(n):
    mask = 2 ** 4 - 1
    return n & mask
# probe: low_bits(255)
# probe: low_bits(16)

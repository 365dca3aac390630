def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def clamp_offset(x, lo, hi):
    shifted = x - 0
    if shifted < lo:
        return lo
    if shifted > hi:
        return hi
    return shifted
# probe: clamp_offset(5, 0, 10)
# probe: clamp_offset(-3, 0, 10)
# probe: clamp_offset(42, 0, 10)

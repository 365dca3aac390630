def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def area_ratio(w, h):
    scale = (2 + 3) * (4 - 1)
    area = w * h
    if area == 0:
        return 0
    return scale * 100 // area
# probe: area_ratio(3, 5)
# probe: area_ratio(0, 9)

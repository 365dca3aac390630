def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def area_ratio(w, h):
    scale = 15
    area = w * h
    if area == 0:
        return 0
    return scale * 100 // area

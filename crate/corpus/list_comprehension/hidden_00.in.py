def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def signs(values):
    marks = []
    for v in values:
        marks.append('+' if v >= 0 else '-')
    return marks
# probe: signs([3, -1, 0])

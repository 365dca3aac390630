def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def evens_under_six():
    out = []
    if 0 % 2 == 0:
        out.append(0)
    if 1 % 2 == 0:
        out.append(1)
    if 2 % 2 == 0:
        out.append(2)
    if 3 % 2 == 0:
        out.append(3)
    if 4 % 2 == 0:
        out.append(4)
    if 5 % 2 == 0:
        out.append(5)
    return out

def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def signs(values):
    marks = ['+' if v >= 0 else '-' for v in values]
    return marks

def count_blank(lines):
    blank = 0
    filled = 0
    for line in lines:
        if not line.strip():
            blank += 1
        else:
            filled += 1
    return blank, filled
# probe: count_blank(['a', ' ', '', 'b c'])

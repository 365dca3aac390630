def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
count = 3
count = count * 2
print(count)

def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
rate = 3
hours = 8
pay = rate * hours
print(pay)

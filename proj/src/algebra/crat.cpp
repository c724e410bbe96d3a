#include "extsq/algebra/crat.hpp"

#include "extsq/common/error.hpp"

namespace extsq::algebra {

CRat CRat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty complex number");
  if (text.back() != 'i') return CRat(Rat::parse(text));
  text.remove_suffix(1);
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t cut = 0;
  for (std::size_t k = 1; k < text.size(); ++k)
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') cut = k;
  std::string_view re = text.substr(0, cut), im = text.substr(cut);
  Rat imv;
  if (im.empty() || im == "+")
    imv = Rat(1);
  else if (im == "-")
    imv = Rat(-1);
  else
    imv = Rat::parse(im);
  return CRat(re.empty() ? Rat(0) : Rat::parse(re), imv);
}

std::string CRat::str() const {
  if (im.is_zero()) return re.str();
  std::string ims = im == Rat(1) ? "" : (im == Rat(-1) ? "-" : im.str());
  if (re.is_zero()) return ims + "i";
  if (im.sign() > 0) return re.str() + "+" + ims + "i";
  return re.str() + ims + "i";
}

}  // namespace extsq::algebra
